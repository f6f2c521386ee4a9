#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ordertype/factored_value.hpp"
#include "ordertype/finite_group.hpp"

namespace otype {

/// n -> number of elements of order exactly n. Only nonzero counts are kept.
struct OrderSpectrum {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t group_order() const;
  /// lcm of the element orders present.
  std::uint64_t exponent() const;

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

/// n -> number of solutions of g^n = 1, stored on the divisors of the group
/// exponent only; every other argument is reduced through gcd(n, exponent).
struct ExponentSpectrum {
  std::uint64_t exponent = 1;
  std::map<std::uint64_t, std::uint64_t> values;

  std::uint64_t at(std::uint64_t n) const;
  std::uint64_t group_order() const { return values.at(exponent); }

  friend bool operator==(const ExponentSpectrum&, const ExponentSpectrum&) = default;
};

/// Counts element orders over the whole group (OpenMP across elements).
OrderSpectrum order_spectrum(const FiniteGroup& g);
/// Single-threaded reference for order_spectrum.
OrderSpectrum order_spectrum_serial(const FiniteGroup& g);

/// e(n) = sum of o(d) over d | n, for every divisor n of the exponent.
ExponentSpectrum exponent_spectrum(const OrderSpectrum& o);
inline ExponentSpectrum exponent_spectrum(const FiniteGroup& g) {
  return exponent_spectrum(order_spectrum(g));
}

/// Möbius inversion o(n) = sum_{d|n} mu(d) e(n/d). A negative count means the
/// table cannot come from a group and raises InconsistentSpectrum.
OrderSpectrum order_from_exponent(const ExponentSpectrum& e);

std::uint64_t group_exponent(const FiniteGroup& g);

struct SpectrumPower {
  ExponentSpectrum spectrum;
  std::uint64_t multiplicity = 1;
};

/// Exponent type of prod_i G_i^{m_i}: at every divisor n of the joint
/// exponent, prod_i e_i(gcd(n, E_i))^{m_i} in factored form.
std::map<std::uint64_t, FactoredValue> spectrum_power_product(std::span<const SpectrumPower> entries);

/// Exponent spectra of many groups, one group per OpenMP task. Output order
/// follows input order.
std::vector<ExponentSpectrum> exponent_spectra(std::span<const FiniteGroup> groups);
std::vector<ExponentSpectrum> exponent_spectra_serial(std::span<const FiniteGroup> groups);

}  // namespace otype
