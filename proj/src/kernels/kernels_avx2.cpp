// AVX2 variants of the batch kernels; this translation unit is compiled with
// -mavx2 -mfma on x86-64 and must only be entered through the dispatch table.

#include "interim/kernels/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include "interim/kernels/math_body.hpp"
#include "interim/kernels/philox.hpp"
#include "interim/kernels/vec_avx2.hpp"
#include "interim/kernels/vec_scalar.hpp"

namespace interim::kern {
namespace {

using V = Avx2Vec;
using S = ScalarVec;

void a_norm_cdf(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) V::store(out + i, body::norm_cdf_core<V>(V::load(x + i)));
    for (; i < n; ++i) out[i] = body::norm_cdf_core<S>(x[i]);
}

void a_inv_norm_cdf(const double* p, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) V::store(out + i, body::inv_norm_cdf_core<V>(V::load(p + i)));
    for (; i < n; ++i) out[i] = body::inv_norm_cdf_core<S>(p[i]);
}

void a_vexp(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) V::store(out + i, body::exp_core<V>(V::load(x + i)));
    for (; i < n; ++i) out[i] = body::exp_core<S>(x[i]);
}

void a_vlog(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) V::store(out + i, body::log_core<V>(V::load(x + i)));
    for (; i < n; ++i) out[i] = body::log_core<S>(x[i]);
}

struct Blocks4 {
    __m256i lo;  // per-lane 64-bit words (y1:y0)
    __m256i hi;  // per-lane 64-bit words (y3:y2)
};

// four Philox blocks in parallel; lanes differ in stream id and/or block index
inline Blocks4 philox4(std::uint64_t key, __m256i stream_ids, __m256i block_indices) {
    const __m256i mask32 = _mm256_set1_epi64x(0xFFFFFFFFll);
    __m256i x0 = _mm256_and_si256(block_indices, mask32);
    __m256i x1 = _mm256_srli_epi64(block_indices, 32);
    __m256i x2 = _mm256_and_si256(stream_ids, mask32);
    __m256i x3 = _mm256_srli_epi64(stream_ids, 32);
    __m256i k0 = _mm256_set1_epi64x(static_cast<long long>(key & 0xFFFFFFFFull));
    __m256i k1 = _mm256_set1_epi64x(static_cast<long long>(key >> 32));
    const __m256i m0 = _mm256_set1_epi64x(kPhiloxM0);
    const __m256i m1 = _mm256_set1_epi64x(kPhiloxM1);
    const __m256i w0 = _mm256_set1_epi64x(kPhiloxW0);
    const __m256i w1 = _mm256_set1_epi64x(kPhiloxW1);
    for (int round = 0; round < 10; ++round) {
        __m256i p0 = _mm256_mul_epu32(x0, m0);
        __m256i p1 = _mm256_mul_epu32(x2, m1);
        __m256i hi0 = _mm256_srli_epi64(p0, 32);
        __m256i lo0 = _mm256_and_si256(p0, mask32);
        __m256i hi1 = _mm256_srli_epi64(p1, 32);
        __m256i lo1 = _mm256_and_si256(p1, mask32);
        x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), k0);
        x1 = lo1;
        x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), k1);
        x3 = lo0;
        k0 = _mm256_and_si256(_mm256_add_epi64(k0, w0), mask32);
        k1 = _mm256_and_si256(_mm256_add_epi64(k1, w1), mask32);
    }
    return {_mm256_or_si256(_mm256_slli_epi64(x1, 32), x0), _mm256_or_si256(_mm256_slli_epi64(x3, 32), x2)};
}

inline __m256i iota_add(std::uint64_t base) {
    return _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(base)), _mm256_set_epi64x(3, 2, 1, 0));
}

// sequential draws within one stream emit 8 doubles per 4 blocks, with the
// lo/hi words interleaved back into draw-index order
void a_fill_u01(std::uint64_t key, std::uint64_t sid, std::uint64_t index0, double* out, std::size_t n) {
    std::size_t i = 0;
    std::uint64_t idx = index0;
    const __m256i sid_v = _mm256_set1_epi64x(static_cast<long long>(sid));
    // lead-in so the vector body starts on an even draw index
    while (i < n && (idx & 1)) {
        out[i++] = body::u01_from_bits<S>(static_cast<std::int64_t>(philox_bits_at(key, sid, idx)));
        ++idx;
    }
    while (i + 8 <= n) {
        Blocks4 b = philox4(key, sid_v, iota_add(idx >> 1));
        __m256d ulo = body::u01_from_bits<V>(b.lo);  // even indices
        __m256d uhi = body::u01_from_bits<V>(b.hi);  // odd indices
        __m256d a = _mm256_unpacklo_pd(ulo, uhi);
        __m256d c = _mm256_unpackhi_pd(ulo, uhi);
        _mm256_storeu_pd(out + i, _mm256_permute2f128_pd(a, c, 0x20));
        _mm256_storeu_pd(out + i + 4, _mm256_permute2f128_pd(a, c, 0x31));
        i += 8;
        idx += 8;
    }
    for (; i < n; ++i, ++idx)
        out[i] = body::u01_from_bits<S>(static_cast<std::int64_t>(philox_bits_at(key, sid, idx)));
}

void a_fill_u01_across(std::uint64_t key, std::uint64_t sid0, std::uint64_t index, double* out, std::size_t n) {
    const __m256i blk = _mm256_set1_epi64x(static_cast<long long>(index >> 1));
    const bool odd = (index & 1) != 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        Blocks4 b = philox4(key, iota_add(sid0 + i), blk);
        _mm256_storeu_pd(out + i, body::u01_from_bits<V>(odd ? b.hi : b.lo));
    }
    for (; i < n; ++i)
        out[i] = body::u01_from_bits<S>(static_cast<std::int64_t>(philox_bits_at(key, sid0 + i, index)));
}

void a_fill_normal(std::uint64_t key, std::uint64_t sid, std::uint64_t index0, double mean, double sd, double* out,
                   std::size_t n) {
    std::size_t i = 0;
    std::uint64_t idx = index0;
    const __m256i sid_v = _mm256_set1_epi64x(static_cast<long long>(sid));
    const __m256d mean_v = _mm256_set1_pd(mean);
    const __m256d sd_v = _mm256_set1_pd(sd);
    while (i < n && (idx & 1)) {
        double z = body::inv_norm_cdf_core<S>(
            body::u01_from_bits<S>(static_cast<std::int64_t>(philox_bits_at(key, sid, idx))));
        out[i++] = S::fma(sd, z, mean);
        ++idx;
    }
    while (i + 8 <= n) {
        Blocks4 b = philox4(key, sid_v, iota_add(idx >> 1));
        __m256d zlo = body::inv_norm_cdf_core<V>(body::u01_from_bits<V>(b.lo));
        __m256d zhi = body::inv_norm_cdf_core<V>(body::u01_from_bits<V>(b.hi));
        __m256d a = _mm256_unpacklo_pd(zlo, zhi);
        __m256d c = _mm256_unpackhi_pd(zlo, zhi);
        _mm256_storeu_pd(out + i, V::fma(sd_v, _mm256_permute2f128_pd(a, c, 0x20), mean_v));
        _mm256_storeu_pd(out + i + 4, V::fma(sd_v, _mm256_permute2f128_pd(a, c, 0x31), mean_v));
        i += 8;
        idx += 8;
    }
    for (; i < n; ++i, ++idx) {
        double z = body::inv_norm_cdf_core<S>(
            body::u01_from_bits<S>(static_cast<std::int64_t>(philox_bits_at(key, sid, idx))));
        out[i] = S::fma(sd, z, mean);
    }
}

void a_fill_normal_across(std::uint64_t key, std::uint64_t sid0, std::uint64_t index, double mean, double sd,
                          double* out, std::size_t n) {
    const __m256i blk = _mm256_set1_epi64x(static_cast<long long>(index >> 1));
    const bool odd = (index & 1) != 0;
    const __m256d mean_v = _mm256_set1_pd(mean);
    const __m256d sd_v = _mm256_set1_pd(sd);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        Blocks4 b = philox4(key, iota_add(sid0 + i), blk);
        __m256d z = body::inv_norm_cdf_core<V>(body::u01_from_bits<V>(odd ? b.hi : b.lo));
        _mm256_storeu_pd(out + i, V::fma(sd_v, z, mean_v));
    }
    for (; i < n; ++i) {
        double z = body::inv_norm_cdf_core<S>(
            body::u01_from_bits<S>(static_cast<std::int64_t>(philox_bits_at(key, sid0 + i, index))));
        out[i] = S::fma(sd, z, mean);
    }
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table = {a_fill_u01,   a_fill_u01_across, a_fill_normal, a_fill_normal_across,
                                      a_norm_cdf,   a_inv_norm_cdf,    a_vexp,        a_vlog};
    return &table;
}

}  // namespace interim::kern

#else

namespace interim::kern {

const KernelTable* avx2_table() { return nullptr; }

}  // namespace interim::kern

#endif
