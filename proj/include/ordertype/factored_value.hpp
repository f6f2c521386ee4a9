#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace otype {

/// A positive rational kept as prime -> signed exponent. Zero exponents are
/// never stored, so the empty map is 1 and equality is structural.
class FactoredValue {
 public:
  FactoredValue() = default;
  static FactoredValue from_integer(std::uint64_t n);
  static FactoredValue from_factors(const std::vector<std::pair<std::uint64_t, std::int64_t>>& f);

  const std::map<std::uint64_t, std::int64_t>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_integer() const;
  std::int64_t exponent_of(std::uint64_t p) const;

  FactoredValue& operator*=(const FactoredValue& other);
  FactoredValue& operator/=(const FactoredValue& other);
  friend FactoredValue operator*(FactoredValue a, const FactoredValue& b) { return a *= b; }
  friend FactoredValue operator/(FactoredValue a, const FactoredValue& b) { return a /= b; }

  /// Raises to a signed integer power.
  FactoredValue pow(std::int64_t k) const;

  /// "2^365·3^105·7^104"; "1" for the unit.
  std::string to_string() const;
  static FactoredValue parse(const std::string& text);

  /// [[p, k], ...] in ascending p.
  nlohmann::json to_json() const;

  friend bool operator==(const FactoredValue&, const FactoredValue&) = default;

 private:
  void add(std::uint64_t p, std::int64_t k);
  std::map<std::uint64_t, std::int64_t> factors_;
};

}  // namespace otype
