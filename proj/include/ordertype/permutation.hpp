#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace otype {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  /// Validates that `images` is a bijection; throws PermutationError otherwise.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images)
      : Permutation(std::vector<Point>(images)) {}

  static Permutation identity(std::size_t degree);

  /// Product of disjoint cycles, e.g. cycles(5, {{0, 1, 2}, {3, 4}}).
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Lengths of all cycles, fixed points included.
  std::vector<std::size_t> cycle_lengths() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
  friend Permutation commutator(const Permutation&, const Permutation&);
  friend Permutation power(const Permutation&, std::uint64_t);

  std::vector<Point> images_;
};

/// x -> p(q(x)). Throws PermutationError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// g p g^-1
Permutation conjugate(const Permutation& g, const Permutation& p);

/// p^-1 q^-1 p q
Permutation commutator(const Permutation& p, const Permutation& q);

Permutation power(const Permutation& p, std::uint64_t k);

/// Least k >= 1 with p^k = 1, i.e. the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace otype
