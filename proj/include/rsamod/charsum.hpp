// Multiplicative characters modulo 2^n.  The odd residues decompose as
// u = (-1)^a 5^b with a in {0,1}, b in Z/2^{n-2} (n >= 3); the characters
// are chi_{alpha,beta}(u) = (-1)^{a alpha} e(b beta / 2^{n-2}) extended by
// zero on even u.  A DFT over Z/2 x Z/2^{n-2} evaluates all 2^{n-1}
// interval sums sum_{k<L} chi(t0+k) at once.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "rsamod/bitnum.hpp"

namespace rsamod {

// Full tables hold 2^{n-1} complex entries; refuse above this by default.
inline constexpr unsigned kDefaultCharCeiling = 22;

struct DlogCoords {
    unsigned a = 0;  // exponent of -1
    mpz_class b;     // exponent of 5, in Z/2^{n-2}
    unsigned n = 0;
};

struct CharacterIndex {
    unsigned alpha = 0;
    std::uint64_t beta = 0;

    bool principal() const { return alpha == 0 && beta == 0; }
    friend bool operator==(const CharacterIndex&, const CharacterIndex&) = default;
};

// The unique (a, b) with u = (-1)^a 5^b (mod 2^n); a = 0 iff u = 1 (mod 4),
// b is recovered bit-by-bit from the congruences mod 2^3, ..., 2^n.
// Requires n >= 3 and u odd in (0, 2^n).
DlogCoords dlog2(const mpz_class& u, unsigned n);
DlogCoords dlog2(const OddResidue& u);

// chi_{alpha,beta}(u); 0 for even u.  Requires 0 <= u < 2^n, beta < 2^{n-2},
// and n <= 64 (the index width; tables cap n far lower anyway).
std::complex<double> eval_char(const CharacterIndex& chi, const mpz_class& u, unsigned n);

// sum_chi chi(u) over all 2^{n-1} characters, exactly: 2^{n-1} when
// u = 1 (mod 2^n), else 0 (closed form over the (a, b) coordinates).
mpz_class orthogonality_check(const mpz_class& u, unsigned n);

// Precomputed coordinates of every odd u < 2^n plus a root-of-unity table,
// for fast repeated evaluation.  Memory ~ 2^n bytes + 2^{n-2} complex.
class CharacterTable {
public:
    explicit CharacterTable(unsigned n, unsigned ceiling = kDefaultCharCeiling);

    unsigned n() const { return n_; }
    DlogCoords coords(std::uint64_t u) const;  // u odd, < 2^n
    std::complex<double> eval(const CharacterIndex& chi, std::uint64_t u) const;

    // raw coordinates for hot loops; u odd, < 2^n
    unsigned log_sign(std::uint64_t u) const { return a_[u >> 1]; }
    std::uint64_t log_exp(std::uint64_t u) const { return b_[u >> 1]; }

private:
    unsigned n_;
    std::uint64_t half_order_;  // 2^{n-2}
    std::vector<std::uint8_t> a_;
    std::vector<std::uint32_t> b_;
    std::vector<std::complex<double>> roots_;  // e(j / 2^{n-2})
};

// sum_{k=0}^{L-1} chi((t0 + k) mod 2^n), term by term
std::complex<double> short_sum_direct(const CharacterIndex& chi, const mpz_class& t0,
                                      std::uint64_t L, unsigned n);
std::complex<double> short_sum_direct(const CharacterTable& table, const CharacterIndex& chi,
                                      std::uint64_t t0, std::uint64_t L);

// Interval sums for every character, indexed alpha * 2^{n-2} + beta.
class ShortSumTable {
public:
    ShortSumTable(unsigned n, std::uint64_t t0, std::uint64_t L,
                  std::vector<std::complex<double>> sums);

    unsigned n() const { return n_; }
    std::uint64_t t0() const { return t0_; }
    std::uint64_t interval_length() const { return len_; }

    std::size_t size() const { return sums_.size(); }  // 2^{n-1}
    const std::complex<double>& at(const CharacterIndex& chi) const;
    const std::complex<double>& flat(std::size_t i) const { return sums_[i]; }
    CharacterIndex index_of(std::size_t i) const;

private:
    unsigned n_;
    std::uint64_t t0_;
    std::uint64_t len_;
    std::vector<std::complex<double>> sums_;
};

// All interval sums at once: indicator of {t0..t0+L-1} restricted to odd
// residues, written in (a, b) coordinates, then the group DFT (sign flip
// along the Z/2 axis, radix-2 FFT of length 2^{n-2} along the other).
ShortSumTable all_short_sums(std::uint64_t t0, std::uint64_t L, unsigned n,
                             unsigned ceiling = kDefaultCharCeiling);

struct MaxSumResult {
    double magnitude = 0.0;
    CharacterIndex argmax;
};

// max |sum| over the nonprincipal characters, with a witnessing index
MaxSumResult max_nonprincipal_sum(std::uint64_t t0, std::uint64_t L, unsigned n,
                                  unsigned ceiling = kDefaultCharCeiling);

namespace detail {

// In-place transform w[a*2^{n-2}+b] -> sum_{a,b} w (-1)^{a alpha} e(b beta / 2^{n-2}),
// result indexed alpha*2^{n-2}+beta.  w.size() must be 2^{n-1}.
void unit_group_dft(std::vector<std::complex<double>>& w, unsigned n);

}  // namespace detail

}  // namespace rsamod
