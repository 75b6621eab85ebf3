// Deterministic pseudorandom stream.  A seed reproduces the same sequence
// bit-for-bit on every platform (mt19937_64 is fully specified; no
// std::*_distribution is used since those are not).
#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace rsamod {

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    // uniform on [0, bound), bound > 0, by rejection
    std::uint64_t below(std::uint64_t bound);

    // uniform on [0, 2^nbits); consumes ceil(nbits/64) words
    mpz_class bits(unsigned nbits);

    // independent child stream for trial #index; depends only on
    // (seed, index), never on this stream's position
    Rng derive(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace rsamod
