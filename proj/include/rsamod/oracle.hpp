// Exact brute-force counts N(k) of prime pairs (p, l) from the window
// (2^{n-1}, 2^n) with p*l = 2^{n-m} s + k (mod 2^n), the averaged identity
// sum_k N(k) = (#P)^2 / 2^m + Delta, and the character-side reconstruction
// of Delta.  Ground truth for the generator and the character machinery.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "rsamod/bitnum.hpp"
#include "rsamod/charsum.hpp"
#include "rsamod/primes.hpp"

namespace rsamod {

enum class CountMode {
    ordered_with_equal,  // ordered pairs, p = l admitted (the double-sum convention)
    ordered_distinct,    // ordered pairs, p != l (the modulus-set convention)
};

struct CountReport {
    unsigned n = 0;
    unsigned m = 0;
    BitString sigma;
    CountMode mode = CountMode::ordered_with_equal;
    std::size_t prime_count = 0;             // #P_n
    std::vector<std::uint32_t> counts;       // N(k), k in [0, 2^{n-m})
    std::uint64_t total = 0;                 // sum_k N(k)
    mpq_class main_term;                     // (#P_n)^2 / 2^m, exact
    mpq_class delta;                         // total - main_term, exact
    double bound_ratio = 0.0;                // |delta| * n^2 / (2^{n-m} #P_n)
};

// Exhaustive count over pairs from the prime set for a single k;
// requires 0 <= k < 2^{n-m}.
std::uint64_t count_nk(const PrimeSet& ps, unsigned m, const BitString& sigma,
                       std::uint64_t k, CountMode mode);
std::uint64_t count_nk(unsigned n, unsigned m, const BitString& sigma, std::uint64_t k,
                       CountMode mode, unsigned sieve_ceiling = kDefaultSieveCeiling);

// Full N(k) table in one pass over the (#P_n)^2 ordered pairs, plus the
// exact main term, Delta and the descriptive bound ratio.  threads = 0
// picks the hardware count; the totals are exact integers either way.
CountReport count_report(const PrimeSet& ps, unsigned m, const BitString& sigma,
                         CountMode mode, unsigned threads = 1);
CountReport count_report(unsigned n, unsigned m, const BitString& sigma, CountMode mode,
                         unsigned sieve_ceiling = kDefaultSieveCeiling, unsigned threads = 1);

// Delta evaluated through the character side: for each nonprincipal chi,
// the interval sum over [2^{n-m} s, 2^{n-m}(s+1)) times the square of
// sum_p chi(p^{-1}), all divided by 2^{n-1}.  Matches the exact Delta of
// count_report in ordered_with_equal mode up to floating accumulation.
std::complex<double> delta_via_characters(const PrimeSet& ps, unsigned m,
                                          const BitString& sigma,
                                          unsigned char_ceiling = kDefaultCharCeiling);
std::complex<double> delta_via_characters(unsigned n, unsigned m, const BitString& sigma,
                                          unsigned sieve_ceiling = kDefaultSieveCeiling,
                                          unsigned char_ceiling = kDefaultCharCeiling);

}  // namespace rsamod
