#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fplab/errors.hpp"
#include "fplab/integral.hpp"
#include "fplab/order.hpp"

using namespace fplab;

namespace {

// u <= v iff u == v or |u| < |v|: a partial order on the line whose
// intervals are not convex.
OrderRel magnitude_order(const SpaceInstance& line) {
    return OrderRel::custom(line, "magnitude",
                            [](const Point& u, const Point& v) { return u == v || std::abs(u[0]) < std::abs(v[0]); });
}

}  // namespace

TEST(Order, ScalarAndPlaneExamples) {
    const auto line = SpaceInstance::euclidean(1);
    const auto plane = SpaceInstance::euclidean(2);
    const auto r1 = OrderRel::for_space(line);
    const auto r2 = OrderRel::for_space(plane);
    EXPECT_TRUE(leq(r1, Point{0.135}, Point{0.9}));
    EXPECT_FALSE(leq(r2, Point{1, 3}, Point{2, 2}));
    EXPECT_FALSE(leq(r2, Point{2, 2}, Point{1, 3}));
    EXPECT_FALSE(comparable(r2, Point{1, 3}, Point{2, 2}));
    EXPECT_TRUE(comparable(r2, Point{1, 1}, Point{2, 2}));
    EXPECT_TRUE(comparable(r1, Point{-7}, Point{3}));
}

TEST(Order, DiskHasNoOrder) {
    const auto disk = SpaceInstance::poincare_disk();
    const auto rel = OrderRel::for_space(disk);
    EXPECT_EQ(rel.kind(), OrderKind::none);
    EXPECT_THROW(leq(rel, Point{0, 0}, Point{0.1, 0}), UnsupportedError);
    EXPECT_THROW(check_interval_convexity(rel, disk, 10, 1), UnsupportedError);
}

TEST(Order, RejectsForeignPoints) {
    const auto rel = OrderRel::for_space(SpaceInstance::euclidean(2));
    EXPECT_THROW(leq(rel, Point{1.0}, Point{1.0, 2.0}), DomainError);
}

TEST(Order, PartialOrderAxioms) {
    for (const auto& space : {SpaceInstance::euclidean(1), SpaceInstance::euclidean(3), parse_space("l2grid:16")}) {
        const auto rel = OrderRel::for_space(space);
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int i = 0; i < 10000; ++i) {
            // draw from a coarse lattice so that comparable pairs are frequent
            auto draw = [&] {
                Point p = sample_point(space, rng);
                for (double& x : p.values()) x = coin(rng);
                return p;
            };
            const Point u = draw(), v = draw(), w = draw();
            ASSERT_TRUE(leq(rel, u, u));
            if (leq(rel, u, v) && leq(rel, v, u)) {
                ASSERT_EQ(u, v);
            }
            if (leq(rel, u, v) && leq(rel, v, w)) {
                ASSERT_TRUE(leq(rel, u, w));
            }
        }
    }
}

TEST(Order, IntervalsConvexForShippedOrders) {
    for (const auto& space : {SpaceInstance::euclidean(1), SpaceInstance::euclidean(4), parse_space("l2grid:64")}) {
        const auto r = check_interval_convexity(OrderRel::for_space(space), space, 10000, 42);
        EXPECT_TRUE(r.holds()) << space.name();
        EXPECT_EQ(r.samples_checked, 20000u);
    }
}

TEST(Order, MagnitudeOrderIntervalsNotConvex) {
    const auto line = SpaceInstance::euclidean(1);
    const auto rel = magnitude_order(line);
    const auto r = check_interval_convexity(rel, line, 2000, 42);
    ASSERT_FALSE(r.holds());
    const auto& w = r.witnesses.front();
    const Point a{w.get("a")}, u{w.get("u")}, v{w.get("v")};
    const Point h = combine(line, u, v, w.get("beta"));
    if (w.get("direction") > 0) {
        EXPECT_TRUE(rel.leq(a, u) && rel.leq(a, v));
        EXPECT_FALSE(rel.leq(a, h));
    } else {
        EXPECT_TRUE(rel.leq(u, a) && rel.leq(v, a));
        EXPECT_FALSE(rel.leq(h, a));
    }
}

TEST(Order, CombinationIsMonotone) {
    for (const auto& space : {SpaceInstance::euclidean(2), parse_space("l2grid:32")}) {
        const auto rel = OrderRel::for_space(space);
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 2000; ++i) {
            Point u = sample_point(space, rng), w = sample_point(space, rng);
            Point v = u, z = w;
            for (double& x : v.values()) x += unit(rng);
            for (double& x : z.values()) x += unit(rng);
            const double beta = unit(rng);
            ASSERT_TRUE(leq(rel, combine(space, u, w, beta), combine(space, v, z, beta)));
        }
    }
}

TEST(Order, InitialValueBelowItsImage) {
    const auto p = build_problem(ProblemSpec{});
    const auto rel = OrderRel::for_space(p.space);
    EXPECT_EQ(rel.kind(), OrderKind::pointwise);
    EXPECT_TRUE(leq(rel, p.y0, apply_operator(p, p.y0)));
}
