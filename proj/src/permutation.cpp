#include "ordertype/permutation.hpp"

#include <numeric>
#include <sstream>

#include "ordertype/error.hpp"

namespace otype {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw PermutationError("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw PermutationError("image array is not a bijection on {0.." +
                             std::to_string(images_.size() - 1) + "}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw PermutationError("permutation degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw PermutationError("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw PermutationError("cannot compose permutations of degree " +
                           std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& g, const Permutation& p) {
  if (g.degree() != p.degree()) throw PermutationError("cannot conjugate across degrees");
  // g p g^-1 sends g(x) to g(p(x)).
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[g.images_[x]] = g.images_[p.images_[x]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  return compose(compose(p.inverse(), q.inverse()), compose(p, q));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (k) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (std::size_t len : p.cycle_lengths()) order = std::lcm(order, std::uint64_t{len});
  return order;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace otype
