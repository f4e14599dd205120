#pragma once

// Seed derivation and portable low-level sampling. The std::mt19937_64
// engine sequence is pinned by the standard; the helpers below avoid
// std::uniform_*_distribution so that draws are bit-identical across
// standard library implementations.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace pairgraph {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a child seed from (seed, stream). Chainable.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

// Uniform double in [0, 1) with 53 random bits.
inline double next_double(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling, no modulo bias.
inline std::uint64_t next_index(std::mt19937_64& eng, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x = eng();
    while (x >= limit) x = eng();
    return x % n;
}

// Standard normal via Box-Muller; consumes two uniforms per draw.
inline double next_normal(std::mt19937_64& eng) {
    const double u1 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_double(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

template <typename T>
void shuffle_in_place(std::vector<T>& xs, std::mt19937_64& eng) {
    for (std::size_t i = xs.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(next_index(eng, i));
        std::swap(xs[i - 1], xs[j]);
    }
}

}  // namespace pairgraph
