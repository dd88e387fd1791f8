#pragma once

#include <cstdint>

#include "nilclass/cdga.hpp"

namespace nilclass {

/// splitmix64: the fixed 64-bit mixer every platform reproduces bit-exactly.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform draw in [0, n) via modulo; n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// n x n matrix with entries p/q, |p| <= bound, 1 <= q <= bound, drawn
/// row-major; whole matrices are rejected until one is invertible.
Matrix random_invertible_matrix(SplitMix64& rng, int n, long bound);

/// Seeded pseudo-random invertible basis change of the Lie algebra
/// (brackets transform by conjugation). Same seed, same input: identical
/// output.
LieStructure scramble(const LieStructure& lie, std::uint64_t seed, long bound);

/// CDGA input scrambles through the Lie side and is re-dualized.
CdgaStructure scramble(const CdgaStructure& cdga, std::uint64_t seed, long bound);

}  // namespace nilclass
