#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace cdsma {

// All randomness flows through mt19937_64 plus the explicit samplers below.
// The std:: distributions are implementation-defined, so avoiding them keeps
// seeded runs bit-identical across toolchains.
using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of substream `index` under a master seed. Adding streams never
// perturbs existing ones.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index + 1));
}

// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t x = rng();
    std::uint64_t r = x % n;
    while (x - r > top - (n - 1)) {
        x = rng();
        r = x % n;
    }
    return r;
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(uniform_below(rng, n));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

}  // namespace cdsma
