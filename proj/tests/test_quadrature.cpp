#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "fplab/errors.hpp"
#include "fplab/quadrature.hpp"

using namespace fplab;

TEST(Quadrature, TrapezoidThreeNodes) {
    auto g = build_grid(3, QuadratureRule::trapezoid);
    EXPECT_EQ(g->nodes, (std::vector<double>{0.0, 0.5, 1.0}));
    EXPECT_DOUBLE_EQ(g->weights[0], 0.25);
    EXPECT_DOUBLE_EQ(g->weights[1], 0.5);
    EXPECT_DOUBLE_EQ(g->weights[2], 0.25);
}

TEST(Quadrature, GaussLegendreTwoNodes) {
    auto g = build_grid(2, QuadratureRule::gauss_legendre);
    const double d = 0.5 / std::sqrt(3.0);
    EXPECT_NEAR(g->nodes[0], 0.5 - d, 1e-15);
    EXPECT_NEAR(g->nodes[1], 0.5 + d, 1e-15);
    EXPECT_NEAR(g->weights[0], 0.5, 1e-15);
    EXPECT_NEAR(g->weights[1], 0.5, 1e-15);
}

TEST(Quadrature, WeightsSumToOne) {
    for (auto rule : {QuadratureRule::trapezoid, QuadratureRule::gauss_legendre}) {
        for (std::size_t n : {2u, 5u, 17u, 64u, 200u}) {
            auto g = build_grid(n, rule);
            EXPECT_NEAR(std::accumulate(g->weights.begin(), g->weights.end(), 0.0), 1.0, 1e-14);
            EXPECT_TRUE(std::is_sorted(g->nodes.begin(), g->nodes.end()));
        }
    }
}

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly) {
    auto g = build_grid(5, QuadratureRule::gauss_legendre);
    for (int k = 0; k <= 9; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) s += g->weights[i] * std::pow(g->nodes[i], k);
        EXPECT_NEAR(s, 1.0 / (k + 1), 1e-14) << k;
    }
}

TEST(Quadrature, RejectsTooFewNodes) {
    EXPECT_THROW(build_grid(1, QuadratureRule::trapezoid), DomainError);
    EXPECT_THROW(parse_quadrature_rule("simpson"), DomainError);
    EXPECT_EQ(parse_quadrature_rule("gl"), QuadratureRule::gauss_legendre);
}
