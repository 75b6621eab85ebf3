// Generation of RSA moduli M = p*l whose bits at positions n-1..n-m spell a
// prescribed pattern: draw (k, p), solve p*r = 2^{n-m} s + k (mod 2^n) for r,
// accept when r lands in the prime window.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rsamod/bitnum.hpp"
#include "rsamod/rng.hpp"

namespace rsamod {

struct GeneratedModulus {
    mpz_class p;
    mpz_class ell;
    mpz_class modulus;  // p * ell
    unsigned n = 0;
    unsigned m = 0;
    BitString sigma;
    std::uint64_t rounds = 0;  // draws consumed, first round included
    std::uint64_t seed = 0;
};

// Largest pattern width with a proven expected-polynomial-time guarantee:
// floor(n - n^{3/4} ln n).  Empty when that is < 1 (every n below ~5500),
// where the guarantee is vacuous but the algorithm still runs.
std::optional<std::uint64_t> theorem_m(unsigned n);

struct TheoremParams {
    explicit TheoremParams(unsigned n) : n(n), m_theorem(theorem_m(n)) {}
    unsigned n;
    std::optional<std::uint64_t> m_theorem;
};

// The unique r in (0, 2^n) with p*r = 2^{n-m} s + k (mod 2^n); r is odd
// because the right side is.  Requires p odd, k odd with 1 <= k < 2^{n-m},
// 0 <= s < 2^m, 1 <= m <= n-1.
OddResidue solve_step2(const mpz_class& p, const mpz_class& s, const mpz_class& k,
                       unsigned n, unsigned m);

struct GenOptions {
    std::uint64_t max_rounds = 0;  // 0 means the default 64*n
    unsigned mr_rounds = 64;
};

// One generation run.  Each round draws a fresh odd k uniform on
// [1, 2^{n-m}) and a fresh uniform prime p, then accepts r when
// 2^{n-1} < r, r != p and r is prime.  Empty result when max_rounds is
// exhausted.  Requires 2 <= m+1 <= n and |sigma| = m.
std::optional<GeneratedModulus> rsa_modulus(unsigned n, unsigned m, const BitString& sigma,
                                            Rng& rng, const GenOptions& opts = {});

// rsa_modulus with the all-zero pattern: bits n-1..n-m of the output are
// forced to zero, so popcount(M) <= 2n - m.
std::optional<GeneratedModulus> sparse_modulus(unsigned n, unsigned m, Rng& rng,
                                               const GenOptions& opts = {});

// Pattern-class membership only: bits n-1..n-m of M equal sigma.  Does not
// factor M or test primality.
bool verify(const mpz_class& M, unsigned n, unsigned m, const BitString& sigma);

struct RoundStats {
    unsigned n = 0;
    unsigned m = 0;
    BitString sigma;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    double success_rate = 0.0;
    // over successful trials; all zero when there were none
    double mean_rounds = 0.0;
    double median_rounds = 0.0;
    std::uint64_t max_rounds_observed = 0;
    std::vector<std::uint64_t> rounds_per_success;
};

// `trials` independent runs on sub-streams derived from (seed, trial index);
// per-trial exhaustion is recorded, never fatal.
RoundStats round_stats(unsigned n, unsigned m, const BitString& sigma,
                       std::uint64_t trials, std::uint64_t seed,
                       const GenOptions& opts = {});

}  // namespace rsamod
