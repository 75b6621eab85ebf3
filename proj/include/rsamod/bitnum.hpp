// Arithmetic in Z/2^n restricted to odd (invertible) residues, plus
// MSB-first bit strings.  Bit positions are counted from 0 at the least
// significant bit throughout.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rsamod {

// 2^n
mpz_class pow2(unsigned n);

// x mod 2^n, result in [0, 2^n) even for negative x
mpz_class low_bits(const mpz_class& x, unsigned n);

// Exponent n of the modulus 2^n.  n >= 2 keeps the prime window
// (2^{n-1}, 2^n) nonempty; character-group operations need n >= 3 and
// check that themselves.
class ModulusExponent {
public:
    ModulusExponent(unsigned n);  // implicit: checked parameter type
    unsigned value() const { return n_; }

private:
    unsigned n_;
};

// Bit pattern of length m, stored MSB-first.  The canonical text form is
// a '0'/'1' string with no separators; the empty string is the length-0
// pattern.
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t m);
    static BitString from_text(std::string_view text);
    // value_to_bitstring: requires 0 <= s < 2^m
    static BitString from_value(const mpz_class& s, std::size_t m);

    std::size_t length() const { return bits_.size(); }
    // i = 0 addresses the leftmost (most significant) element
    bool bit(std::size_t i) const { return bits_[i] != 0; }

    // bitstring_value: sum bits[i] * 2^{m-1-i}, in [0, 2^m)
    mpz_class value() const;
    std::string text() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    std::vector<std::uint8_t> bits_;

    friend BitString extract_bits(const mpz_class&, unsigned, unsigned);
};

// Odd residue u with 0 < u < 2^n.
class OddResidue {
public:
    OddResidue(mpz_class value, ModulusExponent n);

    const mpz_class& value() const { return value_; }
    unsigned exponent() const { return n_; }

private:
    mpz_class value_;
    unsigned n_;
};

// Inverse of u modulo 2^n by Hensel lifting: start from u^{-1} = 1 mod 2,
// double the precision each step.  Rejects even u and u outside (0, 2^n).
mpz_class inv_mod_pow2(const mpz_class& u, ModulusExponent n);
OddResidue inv_mod_pow2(const OddResidue& u);

// u*v mod 2^n; requires 0 <= u, v < 2^n
mpz_class mul_mod_pow2(const mpz_class& u, const mpz_class& v, ModulusExponent n);

// Bits hi..lo of M (positions from the least significant bit), MSB-first;
// requires hi >= lo and M >= 0.
BitString extract_bits(const mpz_class& M, unsigned hi, unsigned lo);

}  // namespace rsamod
