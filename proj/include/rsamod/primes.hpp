// Primality testing, exhaustive enumeration of the prime window
// (2^{n-1}, 2^n), and uniform random sampling from it.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rsamod/rng.hpp"

namespace rsamod {

// Interval sieves above this n are refused (memory); configurable per call.
inline constexpr unsigned kDefaultSieveCeiling = 26;
inline constexpr unsigned kDefaultMillerRabinRounds = 64;

// All primes in (2^{n-1}, 2^n), sorted.
struct PrimeSet {
    unsigned n = 0;
    std::vector<std::uint64_t> primes;

    std::size_t count() const { return primes.size(); }
    bool contains(std::uint64_t x) const;
};

// Miller-Rabin.  For x < 2^64 a fixed deterministic witness set makes the
// answer unconditional; above that, `rounds` bases derived deterministically
// from x give error probability <= 4^-rounds.
bool is_prime(const mpz_class& x, unsigned rounds = kDefaultMillerRabinRounds);
bool is_prime_u64(std::uint64_t x);

PrimeSet enumerate_primes(unsigned n, unsigned ceiling = kDefaultSieveCeiling);

// Uniform draw from the primes in (2^{n-1}, 2^n): rejection sampling of
// uniform odd integers, so the output distribution is exactly uniform on
// the prime set.  Empty (in practice unreachable) after max_attempts draws;
// max_attempts = 0 means the default 100*n^2.
std::optional<mpz_class> sample_prime(unsigned n, Rng& rng,
                                      std::uint64_t max_attempts = 0,
                                      unsigned rounds = kDefaultMillerRabinRounds);

// newline-separated decimal integers, one prime per line
std::string to_text(const PrimeSet& ps);

}  // namespace rsamod
