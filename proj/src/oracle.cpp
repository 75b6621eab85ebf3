#include "rsamod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rsamod {

namespace {

void check_params(unsigned n, unsigned m, const BitString& sigma) {
    if (m < 1 || m >= n) throw std::invalid_argument("oracle: need 1 <= m <= n-1");
    if (sigma.length() != m) throw std::invalid_argument("oracle: sigma length must equal m");
}

}  // namespace

std::uint64_t count_nk(const PrimeSet& ps, unsigned m, const BitString& sigma,
                       std::uint64_t k, CountMode mode) {
    check_params(ps.n, m, sigma);
    if (k >= (1ULL << (ps.n - m))) throw std::invalid_argument("count_nk: k out of range");
    const std::uint64_t mask = (1ULL << ps.n) - 1;
    const std::uint64_t target = (sigma.value().get_ui() << (ps.n - m)) + k;
    std::uint64_t count = 0;
    const auto& primes = ps.primes;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (mode == CountMode::ordered_distinct && i == j) continue;
            if (((primes[i] * primes[j]) & mask) == target) ++count;
        }
    }
    return count;
}

std::uint64_t count_nk(unsigned n, unsigned m, const BitString& sigma, std::uint64_t k,
                       CountMode mode, unsigned sieve_ceiling) {
    return count_nk(enumerate_primes(n, sieve_ceiling), m, sigma, k, mode);
}

CountReport count_report(const PrimeSet& ps, unsigned m, const BitString& sigma,
                         CountMode mode, unsigned threads) {
    check_params(ps.n, m, sigma);
    const unsigned n = ps.n;
    const std::uint64_t mask = (1ULL << n) - 1;
    const std::uint64_t kmask = (1ULL << (n - m)) - 1;
    const std::uint64_t s = sigma.value().get_ui();
    const auto& primes = ps.primes;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>({threads, primes.size() > 0 ? primes.size() : 1,
                               // keep threads * table memory in check for small m
                               std::max<std::size_t>(1, (1ULL << 25) / (kmask + 1))}));

    // one pass over all ordered pairs, bucketing by the low n-m bits
    auto scan = [&](std::size_t lo, std::size_t hi, std::vector<std::uint32_t>& counts) {
        for (std::size_t i = lo; i < hi; ++i) {
            const std::uint64_t pi = primes[i];
            for (std::size_t j = 0; j < primes.size(); ++j) {
                if (mode == CountMode::ordered_distinct && i == j) continue;
                const std::uint64_t v = (pi * primes[j]) & mask;
                if ((v >> (n - m)) == s) ++counts[v & kmask];
            }
        }
    };

    std::vector<std::vector<std::uint32_t>> partial(threads);
    if (threads <= 1) {
        partial[0].assign(kmask + 1, 0);
        scan(0, primes.size(), partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (primes.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            partial[t].assign(kmask + 1, 0);
            const std::size_t lo = std::min<std::size_t>(t * chunk, primes.size());
            const std::size_t hi = std::min<std::size_t>(lo + chunk, primes.size());
            pool.emplace_back(scan, lo, hi, std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
    }

    CountReport rep;
    rep.n = n;
    rep.m = m;
    rep.sigma = sigma;
    rep.mode = mode;
    rep.prime_count = primes.size();
    rep.counts.assign(kmask + 1, 0);
    for (const auto& part : partial)
        for (std::size_t k = 0; k <= kmask; ++k) rep.counts[k] += part[k];
    rep.total = 0;
    for (std::uint32_t c : rep.counts) rep.total += c;

    const mpz_class card(static_cast<unsigned long>(primes.size()));
    rep.main_term = mpq_class(card * card, pow2(m));
    rep.main_term.canonicalize();
    rep.delta = mpq_class(mpz_class(static_cast<unsigned long>(rep.total))) - rep.main_term;
    rep.delta.canonicalize();
    const double denom = double(1ULL << (n - m)) * double(primes.size());
    rep.bound_ratio = std::abs(rep.delta.get_d()) * double(n) * double(n) / denom;
    return rep;
}

CountReport count_report(unsigned n, unsigned m, const BitString& sigma, CountMode mode,
                         unsigned sieve_ceiling, unsigned threads) {
    return count_report(enumerate_primes(n, sieve_ceiling), m, sigma, mode, threads);
}

std::complex<double> delta_via_characters(const PrimeSet& ps, unsigned m,
                                          const BitString& sigma, unsigned char_ceiling) {
    check_params(ps.n, m, sigma);
    const unsigned n = ps.n;
    const CharacterTable table(n, char_ceiling);
    const std::uint64_t half = 1ULL << (n - 2);

    // indicator of {p^{-1} : p prime in the window} in (a, b) coordinates;
    // inversion is free there: dlog(u^{-1}) = (a, -b)
    std::vector<std::complex<double>> prime_sums(1ULL << (n - 1), 0.0);
    for (std::uint64_t p : ps.primes) {
        const unsigned a = table.log_sign(p);
        const std::uint64_t b_inv = (half - table.log_exp(p)) & (half - 1);
        prime_sums[a * half + b_inv] += 1.0;
    }
    detail::unit_group_dft(prime_sums, n);

    const std::uint64_t s = sigma.value().get_ui();
    const ShortSumTable interval = all_short_sums(s << (n - m), 1ULL << (n - m), n, char_ceiling);

    std::complex<double> acc = 0.0;
    for (std::size_t i = 1; i < interval.size(); ++i)
        acc += interval.flat(i) * prime_sums[i] * prime_sums[i];
    return acc / double(1ULL << (n - 1));
}

std::complex<double> delta_via_characters(unsigned n, unsigned m, const BitString& sigma,
                                          unsigned sieve_ceiling, unsigned char_ceiling) {
    if (n > char_ceiling)
        throw std::invalid_argument("delta_via_characters: n exceeds the character ceiling");
    return delta_via_characters(enumerate_primes(n, sieve_ceiling), m, sigma, char_ceiling);
}

}  // namespace rsamod
