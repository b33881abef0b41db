#pragma once

// Dense inner loops shared by the grid-function space, the Nystrom operator
// and the coordinatewise order. Each kernel has a portable scalar reference
// (namespace scalar) and, on x86-64 builds, an AVX2/FMA variant (namespace
// avx2). Callers go through active(), which picks a table once at startup.
//
// Contract between variants:
//   * lerp and all_leq are bit-identical across variants.
//   * reductions (dot, weighted sums) agree to a few ulps of the summed
//     magnitude; the summation order differs.
//   * every variant is deterministic for a given input.

#include <cstddef>
#include <span>
#include <string_view>

namespace fplab::simd {

struct KernelTable {
    std::string_view name;

    /// sum_i w_i * x_i
    double (*dot)(std::span<const double> w, std::span<const double> x);
    /// sum_i w_i * (u_i - v_i)^2
    double (*weighted_sq_dist)(std::span<const double> w, std::span<const double> u,
                               std::span<const double> v);
    /// sum_i (u_i - v_i)^2
    double (*sq_dist)(std::span<const double> u, std::span<const double> v);
    /// out_i = u_i + beta * (v_i - u_i)
    void (*lerp)(std::span<const double> u, std::span<const double> v, double beta,
                 std::span<double> out);
    /// u_i <= v_i for every i (exact comparison, false on NaN)
    bool (*all_leq)(std::span<const double> u, std::span<const double> v);
};

namespace scalar {
double dot(std::span<const double> w, std::span<const double> x);
double weighted_sq_dist(std::span<const double> w, std::span<const double> u,
                        std::span<const double> v);
double sq_dist(std::span<const double> u, std::span<const double> v);
void lerp(std::span<const double> u, std::span<const double> v, double beta, std::span<double> out);
bool all_leq(std::span<const double> u, std::span<const double> v);
}  // namespace scalar

#if defined(FPLAB_WITH_AVX2)
namespace avx2 {
double dot(std::span<const double> w, std::span<const double> x);
double weighted_sq_dist(std::span<const double> w, std::span<const double> u,
                        std::span<const double> v);
double sq_dist(std::span<const double> u, std::span<const double> v);
void lerp(std::span<const double> u, std::span<const double> v, double beta, std::span<double> out);
bool all_leq(std::span<const double> u, std::span<const double> v);
}  // namespace avx2
#endif

const KernelTable& scalar_table();

/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// Selected once: AVX2 when available, unless FPLAB_SIMD=scalar is set in the
/// environment.
const KernelTable& active();

}  // namespace fplab::simd
