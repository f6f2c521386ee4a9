#include "ordertype/revolved.hpp"

#include <numeric>
#include <stdexcept>

#include "ordertype/number_theory.hpp"

namespace otype {

namespace {

FactoredValue revolve_at(std::uint64_t n, const std::map<std::uint64_t, FactoredValue>& factored,
                         std::uint64_t exponent) {
  FactoredValue r;
  for (auto d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    r *= factored.at(std::gcd(n / d, exponent)).pow(mu);
  }
  return r;
}

std::map<std::uint64_t, FactoredValue> factor_values(const ExponentSpectrum& e) {
  std::map<std::uint64_t, FactoredValue> out;
  for (const auto& [n, v] : e.values) out.emplace(n, FactoredValue::from_integer(v));
  return out;
}

}  // namespace

RevolvedSpectrum revolved_spectrum(const ExponentSpectrum& e) {
  const auto factored = factor_values(e);
  RevolvedSpectrum r;
  r.exponent = e.exponent;
  for (const auto& [n, v] : e.values) r.values.emplace(n, revolve_at(n, factored, e.exponent));
  return r;
}

FactoredValue revolved_value(const ExponentSpectrum& e, std::uint64_t n) {
  if (n == 0) throw std::domain_error("revolved_value: n must be positive");
  return revolve_at(n, factor_values(e), e.exponent);
}

std::int64_t ValuationVector::at(ValuationKey key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

void ValuationVector::add(ValuationKey key, std::int64_t k) {
  if (k == 0) return;
  auto [it, inserted] = entries_.try_emplace(key, k);
  if (!inserted && (it->second += k) == 0) entries_.erase(it);
}

ValuationVector& ValuationVector::operator+=(const ValuationVector& other) {
  for (const auto& [key, k] : other.entries_) add(key, k);
  return *this;
}

ValuationVector ValuationVector::scaled(std::int64_t k) const {
  ValuationVector out;
  for (const auto& [key, v] : entries_) out.add(key, v * k);
  return out;
}

nlohmann::json ValuationVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, k] : entries_) out.push_back({key.n, key.p, k});
  return out;
}

ValuationVector ValuationVector::from_json(const nlohmann::json& j) {
  ValuationVector v;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("valuation entry must be [n, p, k]");
    v.add({t[0].get<std::uint64_t>(), t[1].get<std::uint64_t>()}, t[2].get<std::int64_t>());
  }
  return v;
}

ValuationVector valuation_vector(const RevolvedSpectrum& r) {
  ValuationVector v;
  for (const auto& [n, value] : r.values)
    for (const auto& [p, k] : value.factors()) v.add({n, p}, k);
  return v;
}

}  // namespace otype
