#include "ordertype/spectra.hpp"

#include <numeric>
#include <string>

#include "ordertype/error.hpp"
#include "ordertype/number_theory.hpp"

namespace otype {

std::uint64_t OrderSpectrum::group_order() const {
  std::uint64_t total = 0;
  for (const auto& [n, c] : counts) total += c;
  return total;
}

std::uint64_t OrderSpectrum::exponent() const {
  std::uint64_t e = 1;
  for (const auto& [n, c] : counts) e = std::lcm(e, n);
  return e;
}

std::uint64_t ExponentSpectrum::at(std::uint64_t n) const {
  return values.at(std::gcd(n, exponent));
}

namespace {

OrderSpectrum tally(const std::vector<std::uint64_t>& orders) {
  OrderSpectrum o;
  for (auto k : orders) ++o.counts[k];
  return o;
}

}  // namespace

OrderSpectrum order_spectrum(const FiniteGroup& g) {
  const auto& els = g.elements();
  const auto n = static_cast<std::int64_t>(els.size());
  std::vector<std::uint64_t> orders(els.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) orders[i] = element_order(els[i]);
  return tally(orders);
}

OrderSpectrum order_spectrum_serial(const FiniteGroup& g) {
  std::vector<std::uint64_t> orders;
  orders.reserve(g.order());
  for (const auto& p : g.elements()) orders.push_back(element_order(p));
  return tally(orders);
}

ExponentSpectrum exponent_spectrum(const OrderSpectrum& o) {
  ExponentSpectrum e;
  e.exponent = o.exponent();
  for (auto n : divisors(e.exponent)) {
    std::uint64_t total = 0;
    for (const auto& [d, c] : o.counts)
      if (n % d == 0) total += c;
    e.values.emplace(n, total);
  }
  return e;
}

OrderSpectrum order_from_exponent(const ExponentSpectrum& e) {
  OrderSpectrum o;
  for (const auto& [n, value] : e.values) {
    std::int64_t count = 0;
    for (auto d : divisors(n)) count += mobius(d) * static_cast<std::int64_t>(e.at(n / d));
    if (count < 0)
      throw InconsistentSpectrum("Möbius inversion gives " + std::to_string(count) +
                                 " elements of order " + std::to_string(n));
    if (count > 0) o.counts.emplace(n, static_cast<std::uint64_t>(count));
  }
  return o;
}

std::uint64_t group_exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (const auto& p : g.elements()) e = std::lcm(e, element_order(p));
  return e;
}

std::map<std::uint64_t, FactoredValue> spectrum_power_product(std::span<const SpectrumPower> entries) {
  std::uint64_t joint = 1;
  for (const auto& entry : entries) joint = std::lcm(joint, entry.spectrum.exponent);

  // Each table value is factored once and reused for every n.
  std::vector<std::map<std::uint64_t, FactoredValue>> factored(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& [n, v] : entries[i].spectrum.values)
      factored[i].emplace(n, FactoredValue::from_integer(v));

  std::map<std::uint64_t, FactoredValue> out;
  for (auto n : divisors(joint)) {
    FactoredValue value;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& s = entries[i].spectrum;
      value *= factored[i].at(std::gcd(n, s.exponent))
                   .pow(static_cast<std::int64_t>(entries[i].multiplicity));
    }
    out.emplace(n, std::move(value));
  }
  return out;
}

std::vector<ExponentSpectrum> exponent_spectra(std::span<const FiniteGroup> groups) {
  std::vector<ExponentSpectrum> out(groups.size());
  const auto n = static_cast<std::int64_t>(groups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i)
    out[i] = exponent_spectrum(order_spectrum_serial(groups[i]));
  return out;
}

std::vector<ExponentSpectrum> exponent_spectra_serial(std::span<const FiniteGroup> groups) {
  std::vector<ExponentSpectrum> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(exponent_spectrum(order_spectrum_serial(g)));
  return out;
}

}  // namespace otype
