#include "rsamod/charsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace rsamod {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::uint64_t mask_of(unsigned bits) {
    return bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
}

void check_char_n(unsigned n) {
    if (n < 3) throw std::invalid_argument("characters mod 2^n need n >= 3");
}

// (a, b) with u = (-1)^a 5^b mod 2^n, for odd u < 2^n, 3 <= n <= 64
std::pair<unsigned, std::uint64_t> dlog_u64(std::uint64_t u, unsigned n) {
    const std::uint64_t mask = mask_of(n);
    const unsigned a = (u & 3) == 3 ? 1 : 0;
    const std::uint64_t v = a ? (-u & mask) : u;
    std::uint64_t b = 0;
    std::uint64_t x = 1;
    std::uint64_t pw = 5 & mask;  // 5^{2^i}
    for (unsigned i = 0; i + 3 <= n; ++i) {
        if (((x ^ v) & mask_of(i + 3)) != 0) {
            b |= 1ULL << i;
            x = (x * pw) & mask;
        }
        pw = (pw * pw) & mask;
    }
    return {a, b};
}

}  // namespace

DlogCoords dlog2(const mpz_class& u, unsigned n) {
    check_char_n(n);
    if (u <= 0 || u >= pow2(n)) throw std::invalid_argument("dlog2: u must lie in (0, 2^n)");
    if (mpz_even_p(u.get_mpz_t())) throw std::invalid_argument("dlog2: u must be odd");

    if (n <= 64) {
        auto [a, b] = dlog_u64(mpz_get_ui(u.get_mpz_t()), n);
        return DlogCoords{a, mpz_class(b), n};
    }
    const unsigned a = mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0;
    const mpz_class v = a ? low_bits(-u, n) : u;
    mpz_class b = 0;
    mpz_class x = 1;
    mpz_class pw = 5;
    for (unsigned i = 0; i + 3 <= n; ++i) {
        if (low_bits(x, i + 3) != low_bits(v, i + 3)) {
            mpz_setbit(b.get_mpz_t(), i);
            x = low_bits(x * pw, n);
        }
        pw = low_bits(pw * pw, n);
    }
    return DlogCoords{a, std::move(b), n};
}

DlogCoords dlog2(const OddResidue& u) { return dlog2(u.value(), u.exponent()); }

std::complex<double> eval_char(const CharacterIndex& chi, const mpz_class& u, unsigned n) {
    check_char_n(n);
    if (n > 64) throw std::invalid_argument("eval_char: n must be <= 64");
    if (u < 0 || u >= pow2(n)) throw std::invalid_argument("eval_char: u must lie in [0, 2^n)");
    const std::uint64_t half = 1ULL << (n - 2);
    if (chi.alpha > 1 || chi.beta >= half)
        throw std::invalid_argument("eval_char: character index out of range");
    if (mpz_even_p(u.get_mpz_t())) return {0.0, 0.0};
    auto [a, b] = dlog_u64(mpz_get_ui(u.get_mpz_t()), n);
    // (b * beta) mod 2^{n-2} as a 128-bit product; exact for n <= 64
    const std::uint64_t prod = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(b) * chi.beta) & (half - 1));
    std::complex<double> val = std::polar(1.0, kTau * double(prod) / double(half));
    if ((a & chi.alpha) != 0) val = -val;
    return val;
}

mpz_class orthogonality_check(const mpz_class& u, unsigned n) {
    // sum_alpha (-1)^{a alpha} = 2 [a=0]; sum_beta e(b beta / 2^{n-2}) = 2^{n-2} [b=0]
    const DlogCoords c = dlog2(u, n);
    return (c.a == 0 && c.b == 0) ? pow2(n - 1) : mpz_class(0);
}

CharacterTable::CharacterTable(unsigned n, unsigned ceiling) : n_(n) {
    check_char_n(n);
    if (n > ceiling) throw std::invalid_argument("CharacterTable: n exceeds the table ceiling");
    half_order_ = 1ULL << (n - 2);
    const std::uint64_t mask = mask_of(n);
    a_.resize(1ULL << (n - 1));
    b_.resize(1ULL << (n - 1));
    std::uint64_t u = 1;
    for (std::uint64_t b = 0; b < half_order_; ++b) {
        a_[u >> 1] = 0;
        b_[u >> 1] = static_cast<std::uint32_t>(b);
        const std::uint64_t neg = -u & mask;
        a_[neg >> 1] = 1;
        b_[neg >> 1] = static_cast<std::uint32_t>(b);
        u = (u * 5) & mask;
    }
    roots_.resize(half_order_);
    for (std::uint64_t j = 0; j < half_order_; ++j)
        roots_[j] = std::polar(1.0, kTau * double(j) / double(half_order_));
}

DlogCoords CharacterTable::coords(std::uint64_t u) const {
    if (u >= (1ULL << n_) || (u & 1) == 0)
        throw std::invalid_argument("CharacterTable::coords: u must be odd and < 2^n");
    return DlogCoords{a_[u >> 1], mpz_class(static_cast<unsigned long>(b_[u >> 1])), n_};
}

std::complex<double> CharacterTable::eval(const CharacterIndex& chi, std::uint64_t u) const {
    if (u >= (1ULL << n_)) throw std::invalid_argument("CharacterTable::eval: u out of range");
    if (chi.alpha > 1 || chi.beta >= half_order_)
        throw std::invalid_argument("CharacterTable::eval: character index out of range");
    if ((u & 1) == 0) return {0.0, 0.0};
    std::complex<double> val = roots_[(b_[u >> 1] * chi.beta) & (half_order_ - 1)];
    if ((a_[u >> 1] & chi.alpha) != 0) val = -val;
    return val;
}

std::complex<double> short_sum_direct(const CharacterIndex& chi, const mpz_class& t0,
                                      std::uint64_t L, unsigned n) {
    check_char_n(n);
    if (t0 < 0) throw std::invalid_argument("short_sum_direct: t0 must be nonnegative");
    std::complex<double> acc = 0.0;
    mpz_class t = low_bits(t0, n);
    const mpz_class wrap = pow2(n);
    for (std::uint64_t k = 0; k < L; ++k) {
        acc += eval_char(chi, t, n);
        t += 1;
        if (t == wrap) t = 0;
    }
    return acc;
}

std::complex<double> short_sum_direct(const CharacterTable& table, const CharacterIndex& chi,
                                      std::uint64_t t0, std::uint64_t L) {
    const std::uint64_t mask = mask_of(table.n());
    std::complex<double> acc = 0.0;
    std::uint64_t t = t0 & mask;
    for (std::uint64_t k = 0; k < L; ++k) {
        acc += table.eval(chi, t);
        t = (t + 1) & mask;
    }
    return acc;
}

namespace detail {

namespace {

// in-place DFT with kernel e(+ jk / len); root[j] = e(j / len) for j < len/2
void fft_pos(std::complex<double>* x, std::size_t len,
             const std::vector<std::complex<double>>& root) {
    for (std::size_t i = 1, j = 0; i < len; ++i) {
        std::size_t bit = len >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t half = 1; half < len; half <<= 1) {
        const std::size_t stride = len / (2 * half);
        for (std::size_t start = 0; start < len; start += 2 * half) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> odd = x[start + half + k] * root[k * stride];
                const std::complex<double> even = x[start + k];
                x[start + k] = even + odd;
                x[start + half + k] = even - odd;
            }
        }
    }
}

}  // namespace

void unit_group_dft(std::vector<std::complex<double>>& w, unsigned n) {
    check_char_n(n);
    const std::size_t half = std::size_t(1) << (n - 2);
    if (w.size() != 2 * half)
        throw std::invalid_argument("unit_group_dft: vector size must be 2^{n-1}");
    // sign-flip butterfly along the Z/2 axis
    for (std::size_t b = 0; b < half; ++b) {
        const std::complex<double> x0 = w[b];
        const std::complex<double> x1 = w[half + b];
        w[b] = x0 + x1;
        w[half + b] = x0 - x1;
    }
    std::vector<std::complex<double>> root(half / 2 > 0 ? half / 2 : 1);
    for (std::size_t j = 0; j < root.size(); ++j)
        root[j] = std::polar(1.0, kTau * double(j) / double(half));
    fft_pos(w.data(), half, root);
    fft_pos(w.data() + half, half, root);
}

}  // namespace detail

ShortSumTable::ShortSumTable(unsigned n, std::uint64_t t0, std::uint64_t L,
                             std::vector<std::complex<double>> sums)
    : n_(n), t0_(t0), len_(L), sums_(std::move(sums)) {}

const std::complex<double>& ShortSumTable::at(const CharacterIndex& chi) const {
    const std::uint64_t half = std::uint64_t(1) << (n_ - 2);
    if (chi.alpha > 1 || chi.beta >= half)
        throw std::invalid_argument("ShortSumTable::at: character index out of range");
    return sums_[chi.alpha * half + chi.beta];
}

CharacterIndex ShortSumTable::index_of(std::size_t i) const {
    const std::uint64_t half = std::uint64_t(1) << (n_ - 2);
    return CharacterIndex{static_cast<unsigned>(i / half), i % half};
}

ShortSumTable all_short_sums(std::uint64_t t0, std::uint64_t L, unsigned n, unsigned ceiling) {
    check_char_n(n);
    if (n > ceiling) throw std::invalid_argument("all_short_sums: n exceeds the table ceiling");
    const std::uint64_t size = 1ULL << n;
    const std::uint64_t mask = size - 1;
    const std::uint64_t half = size >> 2;  // 2^{n-2}
    const std::uint64_t start = t0 & mask;
    const std::uint64_t full = L >> n;         // whole periods
    const std::uint64_t rem = L & mask;        // leftover window [start, start+rem) mod 2^n
    std::vector<std::complex<double>> w(size >> 1, 0.0);
    std::uint64_t u = 1;
    for (std::uint64_t b = 0; b < half; ++b) {
        const std::uint64_t neg = -u & mask;
        w[b] = double(full + (((u - start) & mask) < rem ? 1 : 0));
        w[half + b] = double(full + (((neg - start) & mask) < rem ? 1 : 0));
        u = (u * 5) & mask;
    }
    detail::unit_group_dft(w, n);
    return ShortSumTable(n, t0, L, std::move(w));
}

MaxSumResult max_nonprincipal_sum(std::uint64_t t0, std::uint64_t L, unsigned n,
                                  unsigned ceiling) {
    const ShortSumTable table = all_short_sums(t0, L, n, ceiling);
    MaxSumResult best;
    best.argmax = table.index_of(1);
    best.magnitude = std::abs(table.flat(1));
    for (std::size_t i = 2; i < table.size(); ++i) {
        const double mag = std::abs(table.flat(i));
        if (mag > best.magnitude) {
            best.magnitude = mag;
            best.argmax = table.index_of(i);
        }
    }
    return best;
}

}  // namespace rsamod
