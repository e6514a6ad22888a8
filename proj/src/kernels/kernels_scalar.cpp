#include "interim/kernels/kernels.hpp"

#include "interim/kernels/math_body.hpp"
#include "interim/kernels/philox.hpp"
#include "interim/kernels/vec_scalar.hpp"

namespace interim::kern {
namespace {

using V = ScalarVec;

void s_norm_cdf(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = body::norm_cdf_core<V>(x[i]);
}

void s_inv_norm_cdf(const double* p, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = body::inv_norm_cdf_core<V>(p[i]);
}

void s_vexp(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = body::exp_core<V>(x[i]);
}

void s_vlog(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = body::log_core<V>(x[i]);
}

void s_fill_u01(std::uint64_t key, std::uint64_t sid, std::uint64_t index0, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits = philox_bits_at(key, sid, index0 + i);
        out[i] = body::u01_from_bits<V>(static_cast<std::int64_t>(bits));
    }
}

void s_fill_u01_across(std::uint64_t key, std::uint64_t sid0, std::uint64_t index, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits = philox_bits_at(key, sid0 + i, index);
        out[i] = body::u01_from_bits<V>(static_cast<std::int64_t>(bits));
    }
}

void s_fill_normal(std::uint64_t key, std::uint64_t sid, std::uint64_t index0, double mean, double sd, double* out,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits = philox_bits_at(key, sid, index0 + i);
        double z = body::inv_norm_cdf_core<V>(body::u01_from_bits<V>(static_cast<std::int64_t>(bits)));
        out[i] = V::fma(sd, z, mean);
    }
}

void s_fill_normal_across(std::uint64_t key, std::uint64_t sid0, std::uint64_t index, double mean, double sd,
                          double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t bits = philox_bits_at(key, sid0 + i, index);
        double z = body::inv_norm_cdf_core<V>(body::u01_from_bits<V>(static_cast<std::int64_t>(bits)));
        out[i] = V::fma(sd, z, mean);
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table = {s_fill_u01,   s_fill_u01_across, s_fill_normal, s_fill_normal_across,
                                      s_norm_cdf,   s_inv_norm_cdf,    s_vexp,        s_vlog};
    return table;
}

}  // namespace interim::kern
