#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace interim::kern {

// One-lane vector model. The batch math kernels are written once against this
// interface and instantiated per lane type; every floating-point operation is
// a single correctly-rounded IEEE op, so the scalar and SIMD instantiations
// produce bit-identical lanes.
struct ScalarVec {
    static constexpr std::size_t lanes = 1;

    using vd = double;    // double lane
    using vi = std::int64_t;
    using vm = bool;      // comparison mask

    static vd set1(double v) { return v; }
    static vd load(const double* p) { return *p; }
    static void store(double* p, vd v) { *p = v; }

    static vd add(vd a, vd b) { return a + b; }
    static vd sub(vd a, vd b) { return a - b; }
    static vd mul(vd a, vd b) { return a * b; }
    static vd div(vd a, vd b) { return a / b; }
    static vd fma(vd a, vd b, vd c) { return std::fma(a, b, c); }
    static vd sqrt(vd a) { return std::sqrt(a); }
    static vd trunc(vd a) { return std::trunc(a); }
    static vd abs(vd a) { return std::bit_cast<double>(std::bit_cast<std::uint64_t>(a) & 0x7FFFFFFFFFFFFFFFull); }
    static vd neg(vd a) { return std::bit_cast<double>(std::bit_cast<std::uint64_t>(a) ^ 0x8000000000000000ull); }
    static vd min(vd a, vd b) { return b < a ? b : a; }

    static vm lt(vd a, vd b) { return a < b; }
    static vm le(vd a, vd b) { return a <= b; }
    static vm gt(vd a, vd b) { return a > b; }
    static vm ge(vd a, vd b) { return a >= b; }
    static vm eq(vd a, vd b) { return a == b; }
    static vm unord(vd a, vd b) { return std::isnan(a) || std::isnan(b); }

    static vm mand(vm a, vm b) { return a && b; }
    static vm mor(vm a, vm b) { return a || b; }

    // a where the mask is set, b elsewhere
    static vd select(vm m, vd a, vd b) { return m ? a : b; }
    static vi selecti(vm m, vi a, vi b) { return m ? a : b; }

    static vi set1i(std::int64_t v) { return v; }
    static vi dtoi_bits(vd a) { return std::bit_cast<std::int64_t>(a); }
    static vd itod_bits(vi a) { return std::bit_cast<double>(a); }
    static vi addi(vi a, vi b) { return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)); }
    static vi subi(vi a, vi b) { return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b)); }
    static vi andi(vi a, vi b) { return a & b; }
    static vi ori(vi a, vi b) { return a | b; }
    template <int K> static vi slli(vi a) { return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) << K); }
    template <int K> static vi srli(vi a) { return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) >> K); }
};

}  // namespace interim::kern
