#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sievekit::arith {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Trial division below 1e4, then Brent's rho; (prime, exponent) pairs sorted
// by prime.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

struct PrimeRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;
  std::vector<std::uint64_t> excluded;  // finite set S, sorted or not
};

// Segmented sieve over [lo, hi], ascending, skipping the excluded set.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

std::vector<std::uint64_t> primes_in(const PrimeRange& range);

// Smallest-prime-factor table for [0, limit]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t limit);

std::uint64_t count_primes_up_to(std::uint64_t x);

}  // namespace sievekit::arith
