#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "rsamod/generator.hpp"
#include "rsamod/oracle.hpp"

using namespace rsamod;

TEST_CASE("N(k) vanishes for even k") {
    const PrimeSet ps = enumerate_primes(7);
    const BitString sigma = BitString::from_text("10");
    for (std::uint64_t k = 0; k < 32; k += 2) {
        CHECK(count_nk(ps, 2, sigma, k, CountMode::ordered_with_equal) == 0);
        CHECK(count_nk(ps, 2, sigma, k, CountMode::ordered_distinct) == 0);
    }
}

TEST_CASE("n=5, m=1, sigma=1: the hand-checkable count") {
    // independent enumeration over the five primes 17..31, frozen here
    const std::vector<std::uint64_t> p5{17, 19, 23, 29, 31};
    std::uint64_t with_equal = 0, distinct = 0;
    std::vector<std::uint32_t> by_k(16, 0);
    for (std::uint64_t p : p5)
        for (std::uint64_t l : p5) {
            const std::uint64_t v = (p * l) % 32;
            if (v >> 4 == 1) {  // top bit of the low 5 spells "1"
                ++with_equal;
                if (p != l) ++distinct;
                ++by_k[v % 16];
            }
        }
    CHECK(with_equal == 5);
    CHECK(distinct == 4);
    CHECK(by_k[1] == 1);   // 23*23 = 17 mod 32
    CHECK(by_k[5] == 2);   // 19*23 and 23*19 = 21 mod 32
    CHECK(by_k[11] == 2);  // 23*29 and 29*23 = 27 mod 32

    const BitString sigma = BitString::from_text("1");
    const CountReport rep = count_report(5, 1, sigma, CountMode::ordered_with_equal);
    CHECK(rep.prime_count == 5);
    CHECK(rep.total == 5);
    CHECK(rep.counts == by_k);
    CHECK(rep.main_term == mpq_class(25, 2));
    CHECK(rep.delta == mpq_class(-15, 2));
    CHECK(rep.delta.get_str() == "-15/2");
    // |delta| n^2 / (2^{n-m} #P) = 7.5 * 25 / 80
    CHECK(rep.bound_ratio == doctest::Approx(2.34375));

    const CountReport repd = count_report(5, 1, sigma, CountMode::ordered_distinct);
    CHECK(repd.total == 4);

    for (std::uint64_t k = 0; k < 16; ++k)
        CHECK(count_nk(5, 1, sigma, k, CountMode::ordered_with_equal) == by_k[k]);
}

TEST_CASE("infeasible parameters are infeasible for the generator too") {
    // n=5, m=4 leaves k=1 as the only draw; the single solving pair is the
    // diagonal (23, 23), which the acceptance test r != p rules out
    const PrimeSet ps = enumerate_primes(5);
    const BitString sigma = BitString::from_text("1000");
    CHECK(count_nk(ps, 4, sigma, 1, CountMode::ordered_with_equal) == 1);
    CHECK(count_nk(ps, 4, sigma, 1, CountMode::ordered_distinct) == 0);
    Rng rng(0);
    GenOptions opts;
    opts.max_rounds = 500;
    CHECK_FALSE(rsa_modulus(5, 4, sigma, rng, opts).has_value());
}

TEST_CASE("pattern classes partition the ordered pairs") {
    for (unsigned n : {6u, 8u, 10u, 14u}) {
        const PrimeSet ps = enumerate_primes(n);
        const std::uint64_t card = ps.count();
        for (unsigned m = 1; m <= (n == 14 ? 4u : 3u); ++m) {
            std::uint64_t sum_with_equal = 0, sum_distinct = 0;
            for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
                const BitString sigma = BitString::from_value(mpz_class(s), m);
                sum_with_equal += count_report(ps, m, sigma, CountMode::ordered_with_equal).total;
                sum_distinct += count_report(ps, m, sigma, CountMode::ordered_distinct).total;
            }
            CHECK(sum_with_equal == card * card);
            CHECK(sum_distinct == card * card - card);
        }
    }
}

TEST_CASE("threaded scan is exact") {
    const PrimeSet ps = enumerate_primes(11);
    const BitString sigma = BitString::from_text("011");
    const CountReport one = count_report(ps, 3, sigma, CountMode::ordered_with_equal, 1);
    const CountReport four = count_report(ps, 3, sigma, CountMode::ordered_with_equal, 4);
    CHECK(one.counts == four.counts);
    CHECK(one.total == four.total);
    CHECK(one.delta == four.delta);
}

TEST_CASE("delta via characters matches the exact count") {
    struct Case {
        unsigned n, m;
        const char* sigma;
    };
    for (const Case c : {Case{10, 2, "01"}, Case{12, 3, "110"}, Case{12, 3, "000"}}) {
        const PrimeSet ps = enumerate_primes(c.n);
        const BitString sigma = BitString::from_text(c.sigma);
        const CountReport rep = count_report(ps, c.m, sigma, CountMode::ordered_with_equal);
        const std::complex<double> dvc = delta_via_characters(ps, c.m, sigma);
        const double exact = rep.delta.get_d();
        CHECK(std::abs(dvc.imag()) < 1e-6 * std::max(1.0, std::abs(exact)));
        CHECK(std::abs(dvc.real() - exact) < 1e-6 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("generated moduli appear in the oracle's count") {
    for (unsigned n : {8u, 10u, 12u}) {
        const unsigned m = 3;
        const PrimeSet ps = enumerate_primes(n);
        Rng rng(n * 1000 + 7);
        const BitString sigma = BitString::from_text("101");
        const auto rec = rsa_modulus(n, m, sigma, rng);
        REQUIRE(rec.has_value());
        // the accepted k is the low n-m bits of M
        const std::uint64_t k = low_bits(rec->modulus, n - m).get_ui();
        CHECK(k % 2 == 1);
        CHECK(count_nk(ps, m, sigma, k, CountMode::ordered_distinct) >= 2);
        CHECK(ps.contains(rec->p.get_ui()));
        CHECK(ps.contains(rec->ell.get_ui()));
    }
}

TEST_CASE("oracle rejects bad parameters") {
    const PrimeSet ps = enumerate_primes(8);
    CHECK_THROWS_AS(count_nk(ps, 2, BitString::from_text("01"), 64, CountMode::ordered_with_equal),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_report(ps, 8, BitString::zeros(8), CountMode::ordered_with_equal),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_report(ps, 2, BitString::zeros(3), CountMode::ordered_with_equal),
                    std::invalid_argument);
    CHECK_THROWS_AS(delta_via_characters(23, 2, BitString::from_text("01")),
                    std::invalid_argument);
}
