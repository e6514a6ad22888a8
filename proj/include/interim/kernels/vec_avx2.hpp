#pragma once

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstdint>

namespace interim::kern {

// Four-lane AVX2 model of the same interface as ScalarVec. Masks are carried
// as all-ones/all-zeros double lanes from _mm256_cmp_pd.
struct Avx2Vec {
    static constexpr std::size_t lanes = 4;

    using vd = __m256d;
    using vi = __m256i;
    using vm = __m256d;

    static vd set1(double v) { return _mm256_set1_pd(v); }
    static vd load(const double* p) { return _mm256_loadu_pd(p); }
    static void store(double* p, vd v) { _mm256_storeu_pd(p, v); }

    static vd add(vd a, vd b) { return _mm256_add_pd(a, b); }
    static vd sub(vd a, vd b) { return _mm256_sub_pd(a, b); }
    static vd mul(vd a, vd b) { return _mm256_mul_pd(a, b); }
    static vd div(vd a, vd b) { return _mm256_div_pd(a, b); }
    static vd fma(vd a, vd b, vd c) { return _mm256_fmadd_pd(a, b, c); }
    static vd sqrt(vd a) { return _mm256_sqrt_pd(a); }
    static vd trunc(vd a) { return _mm256_round_pd(a, _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC); }
    static vd abs(vd a) { return _mm256_and_pd(a, _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll))); }
    static vd neg(vd a) { return _mm256_xor_pd(a, _mm256_castsi256_pd(_mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ull)))); }
    static vd min(vd a, vd b) { return select(lt(b, a), b, a); }

    static vm lt(vd a, vd b) { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
    static vm le(vd a, vd b) { return _mm256_cmp_pd(a, b, _CMP_LE_OQ); }
    static vm gt(vd a, vd b) { return _mm256_cmp_pd(a, b, _CMP_GT_OQ); }
    static vm ge(vd a, vd b) { return _mm256_cmp_pd(a, b, _CMP_GE_OQ); }
    static vm eq(vd a, vd b) { return _mm256_cmp_pd(a, b, _CMP_EQ_OQ); }
    static vm unord(vd a, vd b) { return _mm256_cmp_pd(a, b, _CMP_UNORD_Q); }

    static vm mand(vm a, vm b) { return _mm256_and_pd(a, b); }
    static vm mor(vm a, vm b) { return _mm256_or_pd(a, b); }

    static vd select(vm m, vd a, vd b) { return _mm256_blendv_pd(b, a, m); }
    static vi selecti(vm m, vi a, vi b) {
        return _mm256_castpd_si256(_mm256_blendv_pd(_mm256_castsi256_pd(b), _mm256_castsi256_pd(a), m));
    }

    static vi set1i(std::int64_t v) { return _mm256_set1_epi64x(v); }
    static vi dtoi_bits(vd a) { return _mm256_castpd_si256(a); }
    static vd itod_bits(vi a) { return _mm256_castsi256_pd(a); }
    static vi addi(vi a, vi b) { return _mm256_add_epi64(a, b); }
    static vi subi(vi a, vi b) { return _mm256_sub_epi64(a, b); }
    static vi andi(vi a, vi b) { return _mm256_and_si256(a, b); }
    static vi ori(vi a, vi b) { return _mm256_or_si256(a, b); }
    template <int K> static vi slli(vi a) { return _mm256_slli_epi64(a, K); }
    template <int K> static vi srli(vi a) { return _mm256_srli_epi64(a, K); }
};

}  // namespace interim::kern

#endif  // __AVX2__ && __FMA__
