#include "ordertype/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace otype {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    constexpr std::uint64_t limit = 100'000;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: zero has no factorization");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    if (n % p) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) {
    const std::uint64_t last = small_primes().back();
    if (n > last * last) throw std::domain_error("factorize: input beyond trial-division range");
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, k] : factorize(n)) {
    if (k > 1) return 0;
    mu = -mu;
  }
  return mu;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.front().second == 1;
}

}  // namespace otype
