#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ordertype/permutation.hpp"

namespace otype {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000;
inline constexpr std::size_t kDefaultClassGuard = 64;

/// A permutation group together with its full, sorted element list.
///
/// Elements are kept in lexicographic order of their image arrays, so the
/// identity is always element 0 and iteration order is reproducible.
class FiniteGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& identity() const { return elements_.front(); }

  bool contains(const Permutation& p) const { return index_.contains(p); }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  bool is_trivial() const { return elements_.size() == 1; }

 private:
  friend FiniteGroup enumerate(std::vector<Permutation>, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first closure of the generators under left multiplication.
/// Throws EnumerationCapExceeded once more than `cap` elements appear.
FiniteGroup enumerate(std::vector<Permutation> generators,
                      std::size_t cap = kDefaultEnumerationCap);

/// Smallest normal subgroup of `g` containing `seeds`.
FiniteGroup normal_closure(const FiniteGroup& g, const std::vector<Permutation>& seeds,
                           std::size_t cap = kDefaultEnumerationCap);

/// Normal closure of the commutators of generator pairs.
FiniteGroup derived_subgroup(const FiniteGroup& g);

/// Terms G, G', G'', ... until the series stabilizes.
std::vector<FiniteGroup> derived_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);

/// Conjugacy classes as sorted lists of element indices.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// Every normal subgroup, sorted by order then by element list. The
/// join-closure is exponential in the worst case, so groups with more than
/// `class_guard` conjugacy classes are rejected with ClassCountExceeded.
std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& g,
                                          std::size_t class_guard = kDefaultClassGuard);

/// True iff G = A x B for proper nontrivial normal subgroups A, B.
bool is_direct_product(const FiniteGroup& g, std::size_t class_guard = kDefaultClassGuard);

/// Internal direct product realized on disjoint supports (degree adds up).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace otype
