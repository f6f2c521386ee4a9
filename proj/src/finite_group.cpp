#include "ordertype/finite_group.hpp"

#include <algorithm>
#include <set>

#include "ordertype/error.hpp"

namespace otype {

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup enumerate(std::vector<Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw PermutationError("a group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw PermutationError("generators have mixed degrees");

  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : generators) {
      Permutation y = compose(s, found[head]);
      if (seen.contains(y)) continue;
      if (found.size() >= cap) throw EnumerationCapExceeded(cap);
      seen.emplace(y, found.size());
      found.push_back(std::move(y));
    }
  }

  std::sort(found.begin(), found.end());
  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.index_.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) g.index_.emplace(found[i], i);
  g.elements_ = std::move(found);
  return g;
}

FiniteGroup normal_closure(const FiniteGroup& g, const std::vector<Permutation>& seeds,
                           std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  if (gens.empty()) return enumerate({g.identity()}, cap);

  FiniteGroup n = enumerate(gens, cap);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& x : g.generators()) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Permutation c = conjugate(x, gens[i]);
        if (n.contains(c)) continue;
        gens.push_back(std::move(c));
        n = enumerate(gens, cap);
        grew = true;
      }
    }
  }
  return n;
}

FiniteGroup derived_subgroup(const FiniteGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms, g.order());
}

std::vector<FiniteGroup> derived_series(const FiniteGroup& g) {
  std::vector<FiniteGroup> series{g};
  while (!series.back().is_trivial()) {
    FiniteGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  const auto& els = g.elements();
  std::vector<bool> seen(els.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (seen[i]) continue;
    // Orbit under conjugation by the generators.
    std::vector<std::size_t> cls{i};
    seen[i] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (const auto& x : g.generators()) {
        std::size_t j = *g.index_of(conjugate(x, els[cls[head]]));
        if (!seen[j]) {
          seen[j] = true;
          cls.push_back(j);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

// Subgroups of g identified by their sorted element indices in g.
std::vector<std::size_t> element_key(const FiniteGroup& g, const FiniteGroup& sub) {
  std::vector<std::size_t> key;
  key.reserve(sub.order());
  for (const auto& p : sub.elements()) key.push_back(*g.index_of(p));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& g, std::size_t class_guard) {
  const auto classes = conjugacy_classes(g);
  if (classes.size() > class_guard)
    throw ClassCountExceeded("normal subgroup enumeration: " + std::to_string(classes.size()) +
                             " conjugacy classes exceed the guard of " +
                             std::to_string(class_guard));

  std::set<std::vector<std::size_t>> keys;
  std::vector<FiniteGroup> found;
  auto add = [&](FiniteGroup sub) {
    if (keys.insert(element_key(g, sub)).second) found.push_back(std::move(sub));
  };

  add(enumerate({g.identity()}));
  for (const auto& cls : classes) {
    if (cls.front() == 0) continue;
    add(normal_closure(g, {g.elements()[cls.front()]}, g.order()));
  }

  // Close under joins; the join of two normal subgroups is generated by both.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Permutation> gens = found[i].generators();
      const auto& other = found[j].generators();
      gens.insert(gens.end(), other.begin(), other.end());
      FiniteGroup join = enumerate(std::move(gens), g.order());
      if (join.order() == found[i].order() || join.order() == found[j].order()) continue;
      add(std::move(join));
    }
  }

  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> order;
  for (std::size_t i = 0; i < found.size(); ++i) order.emplace_back(element_key(g, found[i]), i);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<FiniteGroup> sorted;
  sorted.reserve(found.size());
  for (const auto& [key, i] : order) sorted.push_back(std::move(found[i]));
  return sorted;
}

bool is_direct_product(const FiniteGroup& g, std::size_t class_guard) {
  if (g.order() < 4) return false;
  const auto subs = normal_subgroups(g, class_guard);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& a = subs[i];
    if (a.is_trivial() || a.order() == g.order()) continue;
    for (std::size_t j = i; j < subs.size(); ++j) {
      const auto& b = subs[j];
      if (b.is_trivial() || a.order() * b.order() != g.order()) continue;
      std::size_t shared = 0;
      for (const auto& p : a.elements()) shared += b.contains(p);
      if (shared == 1) return true;
    }
  }
  return false;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& p : a.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t x = 0; x < da; ++x) img[x] = p(static_cast<Point>(x));
    for (std::size_t x = 0; x < db; ++x) img[da + x] = static_cast<Point>(da + x);
    gens.emplace_back(std::move(img));
  }
  for (const auto& q : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t x = 0; x < da; ++x) img[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < db; ++x)
      img[da + x] = static_cast<Point>(da + q(static_cast<Point>(x)));
    gens.emplace_back(std::move(img));
  }
  return enumerate(std::move(gens), cap);
}

}  // namespace otype
