#include "rsamod/bitnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsamod {

mpz_class pow2(unsigned n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

mpz_class low_bits(const mpz_class& x, unsigned n) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), n);
    return r;
}

ModulusExponent::ModulusExponent(unsigned n) : n_(n) {
    if (n < 2) throw std::invalid_argument("ModulusExponent: n must be >= 2");
}

BitString BitString::zeros(std::size_t m) {
    return BitString(std::vector<std::uint8_t>(m, 0));
}

BitString BitString::from_text(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitString: text must contain only '0' and '1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::from_value(const mpz_class& s, std::size_t m) {
    if (s < 0 || (s > 0 && mpz_sizeinbase(s.get_mpz_t(), 2) > m))
        throw std::invalid_argument("BitString: value out of range for length");
    std::vector<std::uint8_t> bits(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        bits[i] = static_cast<std::uint8_t>(mpz_tstbit(s.get_mpz_t(), m - 1 - i));
    return BitString(std::move(bits));
}

mpz_class BitString::value() const {
    mpz_class v = 0;
    for (std::uint8_t b : bits_) {
        v <<= 1;
        if (b) v += 1;
    }
    return v;
}

std::string BitString::text() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

OddResidue::OddResidue(mpz_class value, ModulusExponent n)
    : value_(std::move(value)), n_(n.value()) {
    if (value_ <= 0 || value_ >= pow2(n_))
        throw std::invalid_argument("OddResidue: value must lie in (0, 2^n)");
    if (mpz_odd_p(value_.get_mpz_t()) == 0)
        throw std::invalid_argument("OddResidue: value must be odd");
}

mpz_class inv_mod_pow2(const mpz_class& u, ModulusExponent n) {
    const unsigned nb = n.value();
    if (u <= 0 || u >= pow2(nb))
        throw std::invalid_argument("inv_mod_pow2: u must lie in (0, 2^n)");
    if (mpz_even_p(u.get_mpz_t()))
        throw std::invalid_argument("inv_mod_pow2: u must be odd");
    // v = u^{-1} mod 2; each step doubles the valid precision:
    // v <- v (2 - u v) mod 2^{2k}
    mpz_class v = 1;
    for (unsigned k = 1; k < nb; k *= 2) {
        const unsigned bits = std::min(2 * k, nb);
        mpz_class t = low_bits(u * v, bits);
        v = low_bits(v * (2 - t), bits);
    }
    return v;
}

OddResidue inv_mod_pow2(const OddResidue& u) {
    return OddResidue(inv_mod_pow2(u.value(), u.exponent()), u.exponent());
}

mpz_class mul_mod_pow2(const mpz_class& u, const mpz_class& v, ModulusExponent n) {
    const unsigned nb = n.value();
    const mpz_class bound = pow2(nb);
    if (u < 0 || u >= bound || v < 0 || v >= bound)
        throw std::invalid_argument("mul_mod_pow2: operands must lie in [0, 2^n)");
    return low_bits(u * v, nb);
}

BitString extract_bits(const mpz_class& M, unsigned hi, unsigned lo) {
    if (hi < lo) throw std::invalid_argument("extract_bits: hi must be >= lo");
    if (M < 0) throw std::invalid_argument("extract_bits: M must be nonnegative");
    std::vector<std::uint8_t> bits(hi - lo + 1);
    for (unsigned pos = hi, i = 0; pos >= lo; --pos, ++i) {
        bits[i] = static_cast<std::uint8_t>(mpz_tstbit(M.get_mpz_t(), pos));
        if (pos == 0) break;  // unsigned wrap guard when lo == 0
    }
    return BitString(std::move(bits));
}

}  // namespace rsamod
