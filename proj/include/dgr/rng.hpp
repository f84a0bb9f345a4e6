#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace dgr {

/// SplitMix64 output function.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// xoshiro256** 1.0 (Blackman & Vigna), state filled from a 64-bit seed by
/// consecutive SplitMix64 outputs. Satisfies UniformRandomBitGenerator.
/// std::mt19937_64 was several times slower per draw in the update loop.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed = 0) noexcept {
        for (auto& word : state_) {
            word = splitmix64(seed);
            seed += 0x9E3779B97F4A7C15ULL;
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

// Every run owns one of these. Only the helpers below turn bits into
// variates, so trajectories do not depend on the standard library.
using Rng = Xoshiro256StarStar;

inline constexpr std::string_view kRngName = "xoshiro256** (splitmix64-seeded)";
inline constexpr std::string_view kSeedDerivation =
    "splitmix64(master + 0x9E3779B97F4A7C15 * (run + 1))";

/// Seed of run `run` under master seed `master`. Stable across versions;
/// fixtures depend on it.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run) noexcept {
    return splitmix64(master + 0x9E3779B97F4A7C15ULL * (run + 1));
}

/// Uniform integer in [0, n), n > 0. Lemire's multiply-and-reject; always
/// consumes at least one draw.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    std::uint64_t x = rng();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (low < threshold) {
            x = rng();
            m = static_cast<__uint128_t>(x) * n;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// True with probability p. p <= 0 and p >= 1 consume no draw.
inline bool bernoulli(Rng& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01(rng) < p;
}

}  // namespace dgr
