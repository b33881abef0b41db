#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fplab/simd/kernels.hpp"

using namespace fplab;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Simd, ActiveTableIsKnown) {
    const auto& t = simd::active();
    EXPECT_TRUE(t.name == "scalar" || t.name == "avx2");
}

TEST(Simd, ScalarReferenceValues) {
    const std::vector<double> w = {0.25, 0.5, 0.25};
    const std::vector<double> x = {1.0, 2.0, 3.0};
    const std::vector<double> y = {0.0, 2.0, 5.0};
    const auto& s = simd::scalar_table();
    EXPECT_DOUBLE_EQ(s.dot(w, x), 2.0);
    EXPECT_DOUBLE_EQ(s.sq_dist(x, y), 5.0);
    EXPECT_DOUBLE_EQ(s.weighted_sq_dist(w, x, y), 0.25 + 1.0);
    std::vector<double> out(3);
    s.lerp(x, y, 0.5, out);
    EXPECT_EQ(out, (std::vector<double>{0.5, 2.0, 4.0}));
    EXPECT_TRUE(s.all_leq(x, x));
    EXPECT_FALSE(s.all_leq(x, y));
}

TEST(Simd, Avx2MatchesScalar) {
    const auto* v = simd::avx2_table();
    if (v == nullptr) GTEST_SKIP() << "AVX2 unavailable";
    const auto& s = simd::scalar_table();
    std::mt19937_64 rng(7);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 129u}) {
        for (int rep = 0; rep < 20; ++rep) {
            auto w = random_vec(rng, n), a = random_vec(rng, n), b = random_vec(rng, n);
            EXPECT_LE(rel(v->dot(w, a), s.dot(w, a)), 1e-13) << n;
            EXPECT_LE(rel(v->sq_dist(a, b), s.sq_dist(a, b)), 1e-13) << n;
            EXPECT_LE(rel(v->weighted_sq_dist(w, a, b), s.weighted_sq_dist(w, a, b)), 1e-13) << n;
            std::vector<double> o1(n), o2(n);
            const double beta = std::uniform_real_distribution<double>(0, 1)(rng);
            s.lerp(a, b, beta, o1);
            v->lerp(a, b, beta, o2);
            EXPECT_EQ(o1, o2) << n;
            EXPECT_EQ(v->all_leq(a, b), s.all_leq(a, b)) << n;
            auto c = a;
            for (auto& x : c) x += 1.0;
            EXPECT_TRUE(v->all_leq(a, c));
            if (n > 0) {
                c[n - 1] = a[n - 1] - 1.0;
                EXPECT_FALSE(v->all_leq(a, c)) << n;
            }
        }
    }
}
