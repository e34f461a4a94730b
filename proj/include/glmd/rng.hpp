#pragma once

#include <cstdint>
#include <random>

namespace glmd {

/// All randomness flows through explicitly seeded generators passed in by
/// the caller; there is no global RNG state anywhere in the library.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Derive an independent stream from a base seed and a stream id.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{seed, stream};
    return Rng(seq);
}

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace glmd
