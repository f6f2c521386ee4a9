#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ordertype/error.hpp"
#include "ordertype/finite_group.hpp"
#include "ordertype/permutation.hpp"

using namespace otype;

namespace {

FiniteGroup cyclic(std::uint32_t n) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return enumerate({Permutation(img)});
}

FiniteGroup s3() { return enumerate({Permutation{1, 2, 0}, Permutation{1, 0, 2}}); }
FiniteGroup a4() { return enumerate({Permutation{1, 2, 0, 3}, Permutation{0, 2, 3, 1}}); }
FiniteGroup klein() { return enumerate({Permutation{1, 0, 2, 3}, Permutation{0, 1, 3, 2}}); }

std::vector<std::uint64_t> orders_of(const std::vector<FiniteGroup>& gs) {
  std::vector<std::uint64_t> out;
  for (const auto& g : gs) out.push_back(g.order());
  return out;
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), PermutationError);
  EXPECT_THROW(Permutation({0, 3, 1}), PermutationError);
  EXPECT_THROW(Permutation(std::vector<Point>{}), PermutationError);
}

TEST(Permutation, ComposeIdentityIsNeutral) {
  const Permutation p{2, 0, 3, 1};
  EXPECT_EQ(compose(Permutation::identity(4), p), p);
  EXPECT_EQ(compose(p, Permutation::identity(4)), p);
}

TEST(Permutation, ComposeTransposition12Then01IsThreeCycle) {
  const auto p = Permutation::from_cycles(3, {{0, 1}});
  const auto q = Permutation::from_cycles(3, {{1, 2}});
  const auto r = compose(p, q);
  EXPECT_EQ(r(0), 1u);
  EXPECT_EQ(r(1), 2u);
  EXPECT_EQ(r(2), 0u);
  EXPECT_EQ(r, Permutation::from_cycles(3, {{0, 1, 2}}));
}

TEST(Permutation, ComposeWithInverseIsIdentity) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point> img(9);
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(compose(p.inverse(), p).is_identity());
  }
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), PermutationError);
}

TEST(Permutation, ElementOrderExamples) {
  EXPECT_EQ(element_order(Permutation::identity(5)), 1u);
  EXPECT_EQ(element_order(Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})), 7u);
  EXPECT_EQ(element_order(Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})), 6u);
}

TEST(Permutation, ElementOrderMatchesNaiveStepping) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::vector<Point> img(12);
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    EXPECT_EQ(element_order(p), oracle::naive_order(p));
  }
}

TEST(Permutation, ConjugateAndCommutatorDefinitions) {
  const Permutation g{1, 2, 0, 3}, p{0, 1, 3, 2};
  EXPECT_EQ(conjugate(g, p), compose(compose(g, p), g.inverse()));
  EXPECT_EQ(commutator(g, p), compose(compose(compose(g.inverse(), p.inverse()), g), p));
  EXPECT_EQ(power(g, 3), Permutation::identity(4));
  EXPECT_EQ(power(g, 4), g);
}

TEST(FiniteGroup, CyclicFourHasOrderFour) {
  const auto g = enumerate({Permutation{1, 2, 3, 0}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.identity().is_identity());
}

TEST(FiniteGroup, ElementsMatchNaiveClosure) {
  for (const auto& g : {s3(), a4(), cyclic(10)}) {
    const auto ref = oracle::closure(g.generators(), g.degree());
    EXPECT_EQ(std::set<Permutation>(g.elements().begin(), g.elements().end()), ref);
  }
}

TEST(FiniteGroup, CapExceededNamesTheCap) {
  const Permutation a{1, 2, 3, 4, 5, 6, 0}, b{1, 0, 2, 3, 4, 5, 6};  // S_7
  try {
    enumerate({a, b}, 1000);
    FAIL() << "expected EnumerationCapExceeded";
  } catch (const EnumerationCapExceeded& e) {
    EXPECT_EQ(e.cap(), 1000u);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
  EXPECT_EQ(enumerate({a, b}).order(), 5040u);
}

TEST(FiniteGroup, GeneratorOrderIndependent) {
  const auto& cat = oracle::bundled_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    auto gens = cat.group(i).generators();
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(enumerate(gens).elements(), cat.group(i).elements()) << cat.entry(i).name;
  }
}

TEST(FiniteGroup, CatalogOrdersAndLagrange) {
  const auto& cat = oracle::bundled_catalog();
  EXPECT_EQ(cat.group(cat.require({14, 1})).order(), 14u);
  EXPECT_EQ(cat.group(cat.require({168, 42})).order(), 168u);
  for (const auto& g : cat.groups()) {
    for (const auto& x : g.generators()) EXPECT_TRUE(g.contains(x));
    for (const auto& x : g.elements()) EXPECT_EQ(g.order() % element_order(x), 0u);
  }
}

TEST(Solvability, Examples) {
  const auto& cat = oracle::bundled_catalog();
  EXPECT_TRUE(is_solvable(cyclic(4)));
  EXPECT_TRUE(is_solvable(cat.group(cat.resolve("SL(2,3)"))));
  EXPECT_FALSE(is_solvable(cat.group(cat.resolve("GL(3,2)"))));
  EXPECT_FALSE(is_solvable(cat.group(cat.resolve("A_5"))));
}

TEST(Solvability, DerivedSeriesOfS4) {
  const auto s4 = enumerate({Permutation{1, 2, 3, 0}, Permutation{1, 0, 2, 3}});
  const auto series = derived_series(s4);
  EXPECT_EQ(orders_of(series), (std::vector<std::uint64_t>{24, 12, 4, 1}));
}

TEST(Solvability, ProductOfRandomCatalogPairs) {
  const auto& cat = oracle::bundled_catalog();
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  int done = 0;
  while (done < 12) {
    const auto& a = cat.group(pick(rng));
    const auto& b = cat.group(pick(rng));
    if (a.order() * b.order() > 10'000) continue;
    EXPECT_EQ(is_solvable(direct_product(a, b)), is_solvable(a) && is_solvable(b));
    ++done;
  }
}

TEST(NormalSubgroups, SmallExamples) {
  EXPECT_EQ(orders_of(normal_subgroups(cyclic(4))), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(orders_of(normal_subgroups(s3())), (std::vector<std::uint64_t>{1, 3, 6}));
  EXPECT_EQ(orders_of(normal_subgroups(a4())), (std::vector<std::uint64_t>{1, 4, 12}));
}

TEST(NormalSubgroups, MatchBruteForceOverAllSubgroups) {
  const auto s4 = enumerate({Permutation{1, 2, 3, 0}, Permutation{1, 0, 2, 3}});
  for (const auto& g : {s3(), a4(), s4, cyclic(12), klein()}) {
    std::set<std::set<Permutation>> expected;
    for (const auto& h : oracle::all_subgroups(g.elements()))
      if (oracle::is_normal(h, g.elements())) expected.insert(h);
    std::set<std::set<Permutation>> got;
    for (const auto& n : normal_subgroups(g)) got.emplace(n.elements().begin(), n.elements().end());
    EXPECT_EQ(got, expected) << "order " << g.order();
  }
}

TEST(NormalSubgroups, InvariantUnderGeneratorsForCatalog) {
  const auto& cat = oracle::bundled_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& g = cat.group(i);
    for (const auto& n : normal_subgroups(g))
      for (const auto& x : g.generators())
        for (const auto& h : n.generators()) EXPECT_TRUE(n.contains(conjugate(x, h))) << cat.entry(i).name;
  }
}

TEST(NormalSubgroups, ClassGuard) {
  EXPECT_THROW(normal_subgroups(cyclic(30), 10), ClassCountExceeded);
}

TEST(DirectProduct, Detection) {
  EXPECT_TRUE(is_direct_product(klein()));
  EXPECT_TRUE(is_direct_product(cyclic(6)));
  EXPECT_FALSE(is_direct_product(s3()));
  EXPECT_FALSE(is_direct_product(cyclic(8)));
}

TEST(DirectProduct, NoTableGroupIsADirectProduct) {
  const auto& cat = oracle::bundled_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat.entry(i).side == Side::Aux) continue;
    EXPECT_FALSE(is_direct_product(cat.group(i))) << cat.entry(i).id.to_string() << " " << cat.entry(i).name;
  }
}

TEST(DirectProduct, DisjointSupportConstruction) {
  const auto p = direct_product(s3(), cyclic(4));
  EXPECT_EQ(p.order(), 24u);
  EXPECT_EQ(p.degree(), 7u);
  EXPECT_TRUE(is_direct_product(p));
}
