#include "rsamod/rng.hpp"

#include <stdexcept>

namespace rsamod {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // reject the tail so every residue class is equally likely
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return r % bound;
}

mpz_class Rng::bits(unsigned nbits) {
    mpz_class out = 0;
    unsigned words = nbits / 64;
    for (unsigned i = 0; i < words; ++i) {
        out <<= 64;
        out += mpz_class(next_u64());
    }
    unsigned rest = nbits % 64;
    if (rest != 0) {
        out <<= rest;
        out += mpz_class(next_u64() >> (64 - rest));
    }
    return out;
}

Rng Rng::derive(std::uint64_t index) const {
    return Rng(splitmix64(seed_ ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

}  // namespace rsamod
