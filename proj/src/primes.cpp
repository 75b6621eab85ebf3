#include "rsamod/primes.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsamod/bitnum.hpp"

namespace rsamod {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// strong-probable-prime test to base a; x odd, x > 2, 1 < a < x
bool sprp_u64(std::uint64_t x, std::uint64_t a) {
    const std::uint64_t d0 = x - 1;
    const int s = __builtin_ctzll(d0);
    const std::uint64_t d = d0 >> s;
    std::uint64_t y = powmod_u64(a, d, x);
    if (y == 1 || y == d0) return true;
    for (int i = 1; i < s; ++i) {
        y = mulmod_u64(y, y, x);
        if (y == d0) return true;
    }
    return false;
}

// exact for every x < 2^64
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool sprp_mpz(const mpz_class& x, const mpz_class& a) {
    const mpz_class d0 = x - 1;
    const auto s = mpz_scan1(d0.get_mpz_t(), 0);
    mpz_class d = d0 >> s;
    mpz_class y;
    mpz_powm(y.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
    if (y == 1 || y == d0) return true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
        y = y * y % x;
        if (y == d0) return true;
    }
    return false;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// product of the odd primes below 1024; a single gcd against it rejects
// most composites before any powmod
const mpz_class& small_primorial() {
    static const mpz_class value = [] {
        mpz_class acc = 1;
        for (std::uint64_t q = 3; q < 1024; q += 2)
            if (is_prime_u64(q)) acc *= q;
        return acc;
    }();
    return value;
}

}  // namespace

bool PrimeSet::contains(std::uint64_t x) const {
    return std::binary_search(primes.begin(), primes.end(), x);
}

bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t q : kWitnesses) {
        if (x == q) return true;
        if (x % q == 0) return false;
    }
    if (x < 41ULL * 41ULL) return true;
    for (std::uint64_t a : kWitnesses)
        if (!sprp_u64(x, a)) return false;
    return true;
}

bool is_prime(const mpz_class& x, unsigned rounds) {
    if (mpz_fits_ulong_p(x.get_mpz_t())) return is_prime_u64(mpz_get_ui(x.get_mpz_t()));
    if (x < 0 || mpz_even_p(x.get_mpz_t())) return false;
    // x > 2^64 here, so a shared factor below 1024 proves compositeness
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), small_primorial().get_mpz_t());
    if (g != 1) return false;
    // bases drawn from a stream keyed to x itself, so the answer is a
    // pure function of (x, rounds)
    const std::uint64_t key =
        mix64(mpz_fdiv_ui(x.get_mpz_t(), 0xffffffffffc5ULL) ^
              (static_cast<std::uint64_t>(mpz_sizeinbase(x.get_mpz_t(), 2)) << 48));
    Rng base_rng(key);
    const mpz_class span = x - 3;  // bases in [2, x-2]
    for (unsigned i = 0; i < rounds; ++i) {
        const unsigned nb = static_cast<unsigned>(mpz_sizeinbase(span.get_mpz_t(), 2));
        mpz_class a;
        do {
            a = base_rng.bits(nb);
        } while (a > span);
        a += 2;
        if (!sprp_mpz(x, a)) return false;
    }
    return true;
}

PrimeSet enumerate_primes(unsigned n, unsigned ceiling) {
    if (n < 2) throw std::invalid_argument("enumerate_primes: n must be >= 2");
    if (n > ceiling || n > 62)
        throw std::invalid_argument("enumerate_primes: n exceeds the sieve ceiling");
    const std::uint64_t low = 1ULL << (n - 1);
    const std::uint64_t high = 1ULL << n;

    // base primes up to sqrt(high), simple odd sieve
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) < high) ++root;
    std::vector<std::uint64_t> base;
    std::vector<std::uint8_t> small(root + 1, 1);
    for (std::uint64_t q = 3; q <= root; q += 2) {
        if (!small[q]) continue;
        base.push_back(q);
        for (std::uint64_t c = q * q; c <= root; c += 2 * q) small[c] = 0;
    }

    // odd candidates low+1, low+3, ..., high-1
    const std::uint64_t count = (high - low) / 2;
    std::vector<std::uint8_t> composite(count, 0);
    for (std::uint64_t q : base) {
        std::uint64_t start = std::max(q * q, ((low + q) / q) * q);
        if ((start & 1) == 0) start += q;  // odd multiples only
        for (std::uint64_t c = start; c < high; c += 2 * q) composite[(c - low - 1) / 2] = 1;
    }

    PrimeSet ps;
    ps.n = n;
    for (std::uint64_t i = 0; i < count; ++i)
        if (!composite[i]) ps.primes.push_back(low + 1 + 2 * i);
    return ps;
}

std::optional<mpz_class> sample_prime(unsigned n, Rng& rng, std::uint64_t max_attempts,
                                      unsigned rounds) {
    if (n < 2) throw std::invalid_argument("sample_prime: n must be >= 2");
    if (max_attempts == 0) max_attempts = 100ULL * n * n;
    const mpz_class low = pow2(n - 1);
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        // uniform odd integer in (2^{n-1}, 2^n)
        mpz_class cand = low + 2 * rng.bits(n - 2) + 1;
        if (is_prime(cand, rounds)) return cand;
    }
    return std::nullopt;
}

std::string to_text(const PrimeSet& ps) {
    std::string out;
    for (std::uint64_t p : ps.primes) {
        out += std::to_string(p);
        out += '\n';
    }
    return out;
}

}  // namespace rsamod
