#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace otype {

/// Primes below 10^5, sieved once.
const std::vector<std::uint64_t>& small_primes();

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Sorted divisors of n (n >= 1).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// 0 if a square divides n, otherwise (-1)^(number of prime factors).
int mobius(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace otype
