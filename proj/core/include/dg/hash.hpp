#pragma once

#include <cstdint>
#include <string_view>

namespace dg {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

/// 64-bit FNV-1a. Fixed constants so feature indices, split priorities and
/// content hashes are stable across platforms and runs.
constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = kFnvOffsetBasis) {
    std::uint64_t h = seed;
    for (char c : data) {
        h ^= static_cast<std::uint8_t>(c);
        h *= kFnvPrime;
    }
    return h;
}

constexpr std::uint64_t fnv1a64_u64(std::uint64_t value,
                                    std::uint64_t seed = kFnvOffsetBasis) {
    std::uint64_t h = seed;
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xff;
        h *= kFnvPrime;
    }
    return h;
}

/// splitmix64 step. Used as a tiny fully specified RNG wherever determinism
/// across standard library implementations matters (splits, init, dropout).
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic RNG built on splitmix64.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    /// Uniform in [0, n). n must be > 0. Modulo bias is irrelevant at the
    /// scales used here (fixture generation, shuffles).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    /// Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [-scale, scale].
    double next_symmetric(double scale) {
        return (2.0 * next_unit() - 1.0) * scale;
    }

private:
    std::uint64_t state_;
};

}  // namespace dg
