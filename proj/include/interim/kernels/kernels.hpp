#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace interim::kern {

enum class SimdLevel { Scalar, Avx2 };

const char* level_name(SimdLevel level);

// Flat batch entry points. `fill_*` draws are pure functions of
// (key, stream_id, index); the `_across` variants hold the index fixed and
// advance the stream id, which is how per-replicate substreams are filled in
// bulk. Values are identical whichever variant or lane width produced them.
struct KernelTable {
    void (*fill_u01)(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index0, double* out, std::size_t n);
    void (*fill_u01_across)(std::uint64_t key, std::uint64_t stream_id0, std::uint64_t index, double* out, std::size_t n);
    void (*fill_normal)(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index0, double mean, double sd,
                        double* out, std::size_t n);
    void (*fill_normal_across)(std::uint64_t key, std::uint64_t stream_id0, std::uint64_t index, double mean, double sd,
                               double* out, std::size_t n);
    void (*norm_cdf)(const double* x, double* out, std::size_t n);
    void (*inv_norm_cdf)(const double* p, double* out, std::size_t n);
    void (*vexp)(const double* x, double* out, std::size_t n);
    void (*vlog)(const double* x, double* out, std::size_t n);
};

const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when the build or CPU lacks AVX2+FMA

// Level in effect: best available, overridable with INTERIM_SIMD=scalar|avx2.
SimdLevel active_level();
const KernelTable& active_table();

inline void fill_u01(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index0, std::span<double> out) {
    active_table().fill_u01(key, stream_id, index0, out.data(), out.size());
}
inline void fill_u01_across(std::uint64_t key, std::uint64_t stream_id0, std::uint64_t index, std::span<double> out) {
    active_table().fill_u01_across(key, stream_id0, index, out.data(), out.size());
}
inline void fill_normal(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index0, double mean, double sd,
                        std::span<double> out) {
    active_table().fill_normal(key, stream_id, index0, mean, sd, out.data(), out.size());
}
inline void fill_normal_across(std::uint64_t key, std::uint64_t stream_id0, std::uint64_t index, double mean, double sd,
                               std::span<double> out) {
    active_table().fill_normal_across(key, stream_id0, index, mean, sd, out.data(), out.size());
}
inline void norm_cdf(std::span<const double> x, std::span<double> out) {
    active_table().norm_cdf(x.data(), out.data(), x.size());
}
inline void inv_norm_cdf(std::span<const double> p, std::span<double> out) {
    active_table().inv_norm_cdf(p.data(), out.data(), p.size());
}
inline void vexp(std::span<const double> x, std::span<double> out) {
    active_table().vexp(x.data(), out.data(), x.size());
}
inline void vlog(std::span<const double> x, std::span<double> out) {
    active_table().vlog(x.data(), out.data(), x.size());
}

// Single-value forms; always the scalar kernel, bit-identical to batch lanes.
double norm_cdf(double x);
double inv_norm_cdf(double p);
double exp1(double x);
double log1(double x);
double u01_at(std::uint64_t key, std::uint64_t stream_id, std::uint64_t index);

}  // namespace interim::kern
