#pragma once

#include <array>
#include <cstdint>

namespace interim::kern {

// Philox4x32-10 counter-based generator (Salmon et al., Random123). A draw is
// a pure function of (key, counter): key carries the user seed, the counter's
// high 64 bits carry the substream id and its low 64 bits the draw index.
// Each 128-bit block yields two 64-bit words, i.e. two doubles.

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

struct PhiloxBlock {
    std::uint64_t lo;  // words (y1:y0)
    std::uint64_t hi;  // words (y3:y2)
};

inline PhiloxBlock philox4x32_block(std::uint64_t key, std::uint64_t stream_id, std::uint64_t block_index) {
    std::uint32_t x0 = static_cast<std::uint32_t>(block_index);
    std::uint32_t x1 = static_cast<std::uint32_t>(block_index >> 32);
    std::uint32_t x2 = static_cast<std::uint32_t>(stream_id);
    std::uint32_t x3 = static_cast<std::uint32_t>(stream_id >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);

    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * x0;
        std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * x2;
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        x0 = hi1 ^ x1 ^ k0;
        x1 = lo1;
        x2 = hi0 ^ x3 ^ k1;
        x3 = lo0;
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return {static_cast<std::uint64_t>(x1) << 32 | x0, static_cast<std::uint64_t>(x3) << 32 | x2};
}

// 64 random bits for draw `index` within (key, stream_id)
inline std::uint64_t philox_bits_at(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index) {
    PhiloxBlock b = philox4x32_block(key, stream_id, index >> 1);
    return (index & 1) ? b.hi : b.lo;
}

}  // namespace interim::kern
