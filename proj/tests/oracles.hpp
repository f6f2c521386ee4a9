#pragma once

// Slow, independent re-derivations used as test oracles. Nothing here calls
// the library algorithms being checked; only Permutation arithmetic is shared.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ordertype/catalog.hpp"
#include "ordertype/factored_value.hpp"
#include "ordertype/permutation.hpp"

namespace oracle {

using otype::Permutation;

inline const otype::Catalog& bundled_catalog() {
  static const otype::Catalog c = otype::load_catalog(ORDERTYPE_DEFAULT_CATALOG);
  return c;
}

// Closure by repeated multiplication of the whole set until nothing new appears.
inline std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> s{Permutation::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (s.insert(otype::compose(a, g)).second) grew = true;
  }
  return s;
}

// Number of x with x^n = 1, by multiplying x into itself n times.
inline std::uint64_t count_power_identity(const std::vector<Permutation>& elements, std::uint64_t n) {
  std::uint64_t c = 0;
  for (const auto& x : elements) {
    Permutation y = Permutation::identity(x.degree());
    for (std::uint64_t k = 0; k < n; ++k) y = otype::compose(y, x);
    if (y.is_identity()) ++c;
  }
  return c;
}

// Order of x by stepping powers until the identity.
inline std::uint64_t naive_order(const Permutation& x) {
  std::uint64_t k = 1;
  for (Permutation y = x; !y.is_identity(); y = otype::compose(y, x)) ++k;
  return k;
}

// All subgroups of a small group: closures of every pair of elements, then
// joins until stable. Fine for groups of order <= 24.
inline std::set<std::set<Permutation>> all_subgroups(const std::vector<Permutation>& elements) {
  const std::size_t deg = elements.front().degree();
  std::set<std::set<Permutation>> subs;
  for (const auto& a : elements)
    for (const auto& b : elements) subs.insert(closure({a, b}, deg));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::set<Permutation>> cur(subs.begin(), subs.end());
    for (const auto& x : cur)
      for (const auto& y : cur) {
        std::vector<Permutation> gens(x.begin(), x.end());
        gens.insert(gens.end(), y.begin(), y.end());
        if (subs.insert(closure(gens, deg)).second) grew = true;
      }
  }
  return subs;
}

inline bool is_normal(const std::set<Permutation>& h, const std::vector<Permutation>& elements) {
  for (const auto& g : elements)
    for (const auto& x : h)
      if (!h.contains(otype::conjugate(g, x))) return false;
  return true;
}

inline int naive_mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// r(n) = prod_{d|n} e(n/d)^mu(d) as an exact rational, e given as a callable.
template <class E>
mpq_class revolved_rational(std::uint64_t n, E e) {
  mpq_class r = 1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = naive_mobius(d);
    if (mu == 0) continue;
    const mpq_class v = e(n / d);
    r = mu > 0 ? mpq_class(r * v) : mpq_class(r / v);
  }
  return r;
}

inline mpq_class to_rational(const otype::FactoredValue& f) {
  mpz_class num = 1, den = 1;
  for (const auto& [p, k] : f.factors()) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k > 0 ? k : -k));
    (k > 0 ? num : den) *= pk;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace oracle
