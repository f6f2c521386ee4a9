#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include <nlohmann/json.hpp>

#include "ordertype/factored_value.hpp"
#include "ordertype/spectra.hpp"

namespace otype {

/// Multiplicative Möbius inversion of an exponent spectrum:
/// r(n) = prod_{d|n} e(n/d)^mu(d), kept on the divisors of the exponent
/// (it is 1 everywhere else).
struct RevolvedSpectrum {
  std::uint64_t exponent = 1;
  std::map<std::uint64_t, FactoredValue> values;

  friend bool operator==(const RevolvedSpectrum&, const RevolvedSpectrum&) = default;
};

RevolvedSpectrum revolved_spectrum(const ExponentSpectrum& e);

/// The defining product evaluated at an arbitrary n >= 1, with e reduced
/// through gcd. Used to check that r vanishes (equals 1) off the exponent.
FactoredValue revolved_value(const ExponentSpectrum& e, std::uint64_t n);

struct ValuationKey {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  friend auto operator<=>(const ValuationKey&, const ValuationKey&) = default;
};

/// Sparse (n, p) -> exponent of p in r(n); zero entries are never stored.
/// Keys iterate in lexicographic (n, p) order.
class ValuationVector {
 public:
  const std::map<ValuationKey, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::int64_t at(ValuationKey key) const;

  void add(ValuationKey key, std::int64_t k);
  ValuationVector& operator+=(const ValuationVector& other);
  ValuationVector scaled(std::int64_t k) const;
  friend ValuationVector operator+(ValuationVector a, const ValuationVector& b) { return a += b; }

  /// Sorted [[n, p, k], ...].
  nlohmann::json to_json() const;
  static ValuationVector from_json(const nlohmann::json& j);

  friend bool operator==(const ValuationVector&, const ValuationVector&) = default;

 private:
  std::map<ValuationKey, std::int64_t> entries_;
};

ValuationVector valuation_vector(const RevolvedSpectrum& r);
inline ValuationVector valuation_vector(const ExponentSpectrum& e) {
  return valuation_vector(revolved_spectrum(e));
}

}  // namespace otype
