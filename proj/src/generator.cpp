#include "rsamod/generator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "rsamod/primes.hpp"

namespace rsamod {

std::optional<std::uint64_t> theorem_m(unsigned n) {
    if (n < 2) throw std::invalid_argument("theorem_m: n must be >= 2");
    const long double nn = static_cast<long double>(n);
    const long double x = nn - std::pow(nn, 0.75L) * std::log(nn);
    if (x < 1.0L) return std::nullopt;
    return static_cast<std::uint64_t>(std::floor(x));
}

OddResidue solve_step2(const mpz_class& p, const mpz_class& s, const mpz_class& k,
                       unsigned n, unsigned m) {
    if (m < 1 || m >= n) throw std::invalid_argument("solve_step2: need 1 <= m <= n-1");
    if (mpz_even_p(p.get_mpz_t()) || p <= 0)
        throw std::invalid_argument("solve_step2: p must be a positive odd integer");
    if (mpz_even_p(k.get_mpz_t()))
        throw std::invalid_argument("solve_step2: k must be odd");
    if (k < 1 || k >= pow2(n - m))
        throw std::invalid_argument("solve_step2: k must lie in [1, 2^{n-m})");
    if (s < 0 || s >= pow2(m))
        throw std::invalid_argument("solve_step2: s must lie in [0, 2^m)");
    const mpz_class target = (s << (n - m)) + k;  // odd, since k is
    const mpz_class pinv = inv_mod_pow2(low_bits(p, n), n);
    return OddResidue(low_bits(target * pinv, n), n);
}

std::optional<GeneratedModulus> rsa_modulus(unsigned n, unsigned m, const BitString& sigma,
                                            Rng& rng, const GenOptions& opts) {
    if (n < 2) throw std::invalid_argument("rsa_modulus: n must be >= 2");
    if (m < 1 || m >= n) throw std::invalid_argument("rsa_modulus: need 1 <= m <= n-1");
    if (sigma.length() != m)
        throw std::invalid_argument("rsa_modulus: sigma length must equal m");
    const std::uint64_t max_rounds = opts.max_rounds != 0 ? opts.max_rounds : 64ULL * n;
    const mpz_class s = sigma.value();
    const mpz_class half = pow2(n - 1);

    for (std::uint64_t round = 1; round <= max_rounds; ++round) {
        // fresh draws every round: odd k uniform on [1, 2^{n-m}), then p
        const mpz_class k = 2 * rng.bits(n - m - 1) + 1;
        const auto p = sample_prime(n, rng, 0, opts.mr_rounds);
        if (!p) continue;
        const mpz_class r = solve_step2(*p, s, k, n, m).value();
        if (r <= half || r == *p) continue;
        if (!is_prime(r, opts.mr_rounds)) continue;

        GeneratedModulus out;
        out.p = *p;
        out.ell = r;
        out.modulus = *p * r;
        out.n = n;
        out.m = m;
        out.sigma = sigma;
        out.rounds = round;
        out.seed = rng.seed();
        assert(verify(out.modulus, n, m, sigma));
        return out;
    }
    return std::nullopt;
}

std::optional<GeneratedModulus> sparse_modulus(unsigned n, unsigned m, Rng& rng,
                                               const GenOptions& opts) {
    return rsa_modulus(n, m, BitString::zeros(m), rng, opts);
}

bool verify(const mpz_class& M, unsigned n, unsigned m, const BitString& sigma) {
    if (M < 0 || n < 1 || m < 1 || m > n) return false;
    if (sigma.length() != m) return false;
    return extract_bits(M, n - 1, n - m) == sigma;
}

RoundStats round_stats(unsigned n, unsigned m, const BitString& sigma, std::uint64_t trials,
                       std::uint64_t seed, const GenOptions& opts) {
    RoundStats st;
    st.n = n;
    st.m = m;
    st.sigma = sigma;
    st.seed = seed;
    st.trials = trials;

    const Rng base(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng stream = base.derive(t);
        const auto got = rsa_modulus(n, m, sigma, stream, opts);
        if (got)
            st.rounds_per_success.push_back(got->rounds);
        else
            ++st.failures;
    }
    st.successes = st.rounds_per_success.size();
    st.success_rate = trials == 0 ? 0.0 : double(st.successes) / double(trials);
    if (st.successes > 0) {
        std::vector<std::uint64_t> sorted = st.rounds_per_success;
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t sum = 0;
        for (std::uint64_t r : sorted) sum += r;
        st.mean_rounds = double(sum) / double(st.successes);
        st.median_rounds = st.successes % 2 == 1
                               ? double(sorted[st.successes / 2])
                               : 0.5 * (double(sorted[st.successes / 2 - 1]) +
                                        double(sorted[st.successes / 2]));
        st.max_rounds_observed = sorted.back();
    }
    return st;
}

}  // namespace rsamod
