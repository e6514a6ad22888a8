#include <cstdlib>
#include <cstring>

#include "interim/kernels/kernels.hpp"
#include "interim/kernels/math_body.hpp"
#include "interim/kernels/philox.hpp"
#include "interim/kernels/vec_scalar.hpp"

namespace interim::kern {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

SimdLevel resolve_level() {
    const bool avx2_ok = avx2_table() != nullptr && cpu_has_avx2_fma();
    if (const char* env = std::getenv("INTERIM_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return SimdLevel::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_ok) return SimdLevel::Avx2;
        if (std::strcmp(env, "avx2") == 0) return SimdLevel::Scalar;  // requested but unavailable
    }
    return avx2_ok ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

}  // namespace

const char* level_name(SimdLevel level) { return level == SimdLevel::Avx2 ? "avx2" : "scalar"; }

SimdLevel active_level() {
    static const SimdLevel level = resolve_level();
    return level;
}

const KernelTable& active_table() {
    return active_level() == SimdLevel::Avx2 ? *avx2_table() : scalar_table();
}

double norm_cdf(double x) { return body::norm_cdf_core<ScalarVec>(x); }

double inv_norm_cdf(double p) { return body::inv_norm_cdf_core<ScalarVec>(p); }

double exp1(double x) { return body::exp_core<ScalarVec>(x); }

double log1(double x) { return body::log_core<ScalarVec>(x); }

double u01_at(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index) {
    return body::u01_from_bits<ScalarVec>(static_cast<std::int64_t>(philox_bits_at(key, stream_id, index)));
}

}  // namespace interim::kern
