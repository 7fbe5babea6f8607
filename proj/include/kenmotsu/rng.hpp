#pragma once

#include <cstdint>

#include "kenmotsu/model.hpp"

namespace kenmotsu {

/// splitmix64: tiny deterministic generator, identical across platforms so
/// generated corpora can be reproduced from (n, seed) alone.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }
};

/// Uniform draw from [-5, 5]^n, the spectrum range used by the generators.
Lambda random_lambda(int n, SplitMix64& rng);

/// Invertible matrix with entries from [-1, 1], resampled until the
/// Frobenius condition estimate stays within cond_max.
RealMatrix random_invertible(int dim, SplitMix64& rng, double cond_max = 1e4);

/// Random point with |t| <= t_box and coordinates in [-z_box, z_box].
ModelPoint random_point(int n, SplitMix64& rng, double t_box = 3.0, double z_box = 3.0);

} // namespace kenmotsu
