#include "fplab/simd/kernels.hpp"

namespace fplab::simd::scalar {

double dot(std::span<const double> w, std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * x[i];
    return acc;
}

double weighted_sq_dist(std::span<const double> w, std::span<const double> u,
                        std::span<const double> v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double d = u[i] - v[i];
        acc += w[i] * (d * d);
    }
    return acc;
}

double sq_dist(std::span<const double> u, std::span<const double> v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        acc += d * d;
    }
    return acc;
}

void lerp(std::span<const double> u, std::span<const double> v, double beta,
          std::span<double> out) {
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + beta * (v[i] - u[i]);
}

bool all_leq(std::span<const double> u, std::span<const double> v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!(u[i] <= v[i])) return false;
    }
    return true;
}

}  // namespace fplab::simd::scalar
