#pragma once

#include <cstdint>
#include <cmath>

namespace ngbandit {

/// Avalanche mixer from splitmix64 (Steele, Lea & Flood; public domain
/// reference constants). Every input bit affects every output bit.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream: xoshiro256++ seeded through splitmix64.
///
/// Splitting construction: the 256-bit generator state is filled with four
/// consecutive splitmix64 outputs started from `seed ^ mix64(stream_id)`.
/// The avalanche hash decorrelates nearby stream ids, so (seed, i) and
/// (seed, j) for i != j behave as independent streams, while identical
/// (seed, stream_id) pairs always reproduce the same draw sequence.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t sm = seed ^ mix64(stream_id);
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9e3779b97f4a7c15ULL;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double strictly inside (0, 1); 53-bit resolution.
    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (two uniforms per draw, no cached
    /// second value, so the consumption pattern is one-to-one replayable).
    double next_gaussian() {
        const double u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Lemire-style rejection keeps the map unbiased.
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_[4];
};

}  // namespace ngbandit
