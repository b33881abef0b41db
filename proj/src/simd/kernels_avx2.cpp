#include "fplab/simd/kernels.hpp"

#include <immintrin.h>

namespace fplab::simd::avx2 {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double dot(std::span<const double> w, std::span<const double> x) {
    const std::size_t n = w.size();
    const std::size_t n4 = n - (n & 3);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(&w[i]), _mm256_loadu_pd(&x[i]), acc);
    }
    double result = hsum(acc);
    for (; i < n; ++i) result += w[i] * x[i];
    return result;
}

double weighted_sq_dist(std::span<const double> w, std::span<const double> u,
                        std::span<const double> v) {
    const std::size_t n = w.size();
    const std::size_t n4 = n - (n & 3);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(&u[i]), _mm256_loadu_pd(&v[i]));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(&w[i]), _mm256_mul_pd(d, d), acc);
    }
    double result = hsum(acc);
    for (; i < n; ++i) {
        const double d = u[i] - v[i];
        result += w[i] * (d * d);
    }
    return result;
}

double sq_dist(std::span<const double> u, std::span<const double> v) {
    const std::size_t n = u.size();
    const std::size_t n4 = n - (n & 3);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(&u[i]), _mm256_loadu_pd(&v[i]));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double result = hsum(acc);
    for (; i < n; ++i) {
        const double d = u[i] - v[i];
        result += d * d;
    }
    return result;
}

// No FMA here: lerp must round exactly like the scalar reference.
void lerp(std::span<const double> u, std::span<const double> v, double beta,
          std::span<double> out) {
    const std::size_t n = u.size();
    const std::size_t n4 = n - (n & 3);
    const __m256d b = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d uu = _mm256_loadu_pd(&u[i]);
        __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(&v[i]), uu);
        _mm256_storeu_pd(&out[i], _mm256_add_pd(uu, _mm256_mul_pd(b, diff)));
    }
    for (; i < n; ++i) out[i] = u[i] + beta * (v[i] - u[i]);
}

bool all_leq(std::span<const double> u, std::span<const double> v) {
    const std::size_t n = u.size();
    const std::size_t n4 = n - (n & 3);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d le = _mm256_cmp_pd(_mm256_loadu_pd(&u[i]), _mm256_loadu_pd(&v[i]), _CMP_LE_OQ);
        if (_mm256_movemask_pd(le) != 0xF) return false;
    }
    for (; i < n; ++i) {
        if (!(u[i] <= v[i])) return false;
    }
    return true;
}

}  // namespace fplab::simd::avx2
