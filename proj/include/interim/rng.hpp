#pragma once

#include <cstdint>

namespace interim {

// Substream layout on top of the counter RNG: a 64-bit stream id carries a
// purpose tag in the top 16 bits and a caller index below, so the draws used
// by different parts of a run never collide under one seed.
enum class RngDomain : std::uint16_t {
    MixtureSelect = 1,  // per experiment: mixture component pick
    MixtureValue = 2,   // per experiment: effect draw within a component
    StreamNoise = 3,    // per experiment: per-period estimate noise
    PposTheta = 4,      // per replicate: effect draw from the interim posterior
    PposFuture = 5,     // per replicate: future-period estimates
    CheckTheta = 6,     // per (replicate, experiment): effect redraw
    CheckStream = 7,    // per (replicate, experiment): replicated stream noise
};

constexpr std::uint64_t rng_stream_id(RngDomain domain, std::uint64_t index) {
    return (static_cast<std::uint64_t>(domain) << 48) | (index & 0x0000FFFFFFFFFFFFull);
}

// splitmix64 finalizer; used to derive nested seeds deterministically
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace interim
