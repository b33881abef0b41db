#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fplab/errors.hpp"
#include "fplab/geodesic.hpp"

using namespace fplab;

namespace {

const PropertyReport& find(const std::vector<PropertyReport>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.property == name) return r;
    }
    throw std::runtime_error("no report " + name);
}

// Hyperbolic distance from the origin, independent of the library formula.
double disk_radial(double r) { return 2.0 * std::atanh(r); }

std::vector<SpaceInstance> shipped_spaces() {
    return {SpaceInstance::euclidean(1), SpaceInstance::euclidean(2), SpaceInstance::euclidean(5),
            SpaceInstance::poincare_disk(), parse_space("l2grid:64")};
}

}  // namespace

TEST(Dist, EuclideanLine) {
    const auto s = SpaceInstance::euclidean(1);
    EXPECT_EQ(dist(s, Point{0.9}, Point{0.0}), 0.9);
    EXPECT_EQ(dist(s, Point{0.3}, Point{0.3}), 0.0);
}

TEST(Dist, DiskRadial) {
    const auto s = SpaceInstance::poincare_disk();
    EXPECT_NEAR(dist(s, Point{0.0, 0.0}, Point{0.5, 0.0}), std::log(3.0), 1e-14);
    EXPECT_NEAR(dist(s, Point{0.0, 0.0}, Point{0.0, -0.9}), disk_radial(0.9), 1e-13);
    EXPECT_EQ(dist(s, Point{0.2, 0.1}, Point{0.2, 0.1}), 0.0);
}

TEST(Dist, DiskRejectsBoundary) {
    const auto s = SpaceInstance::poincare_disk();
    EXPECT_THROW(dist(s, Point{1.0, 0.0}, Point{0.0, 0.0}), DomainError);
    EXPECT_THROW(dist(s, Point{0.0}, Point{0.0, 0.0}), DomainError);
}

TEST(Dist, GridRejectsForeignGrid) {
    const auto a = parse_space("l2grid:8");
    const auto b = SpaceInstance::l2_grid(build_grid(8, QuadratureRule::gauss_legendre));
    const Point u = a.make_point(std::vector<double>(8, 0.0));
    const Point v = b.make_point(std::vector<double>(8, 1.0));
    EXPECT_THROW(dist(a, u, v), DomainError);
}

TEST(Combine, TableRowTwo) {
    const auto s = SpaceInstance::euclidean(1);
    EXPECT_EQ(combine(s, Point{0.9}, Point{0.0}, 0.85)[0], 0.135);
    EXPECT_NEAR(combine(s, Point{0.135}, Point{0.0}, 0.85)[0], 0.02025, 1e-17);
}

TEST(Combine, Endpoints) {
    for (const auto& s : shipped_spaces()) {
        std::mt19937_64 rng(3);
        const Point u = sample_point(s, rng), v = sample_point(s, rng);
        EXPECT_EQ(combine(s, u, v, 0.0), u) << s.name();
        EXPECT_EQ(combine(s, u, v, 1.0), v) << s.name();
        EXPECT_THROW(combine(s, u, v, 1.5), DomainError);
        EXPECT_THROW(combine(s, u, v, -0.1), DomainError);
    }
}

TEST(Combine, DiskRadialMidpoint) {
    const auto s = SpaceInstance::poincare_disk();
    const Point m = combine(s, Point{0.0, 0.0}, Point{0.5, 0.0}, 0.5);
    const double r3 = std::sqrt(3.0);
    EXPECT_NEAR(m[0], (r3 - 1.0) / (r3 + 1.0), 1e-15);
    EXPECT_NEAR(m[1], 0.0, 1e-15);
    EXPECT_NEAR(disk_radial(m[0]), 0.5 * std::log(3.0), 1e-14);
}

TEST(Combine, GeodesicSplit) {
    for (const auto& s : shipped_spaces()) {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 2000; ++i) {
            const Point u = sample_point(s, rng), v = sample_point(s, rng);
            const double beta = unit(rng);
            const Point h = combine(s, u, v, beta);
            const double d = dist(s, u, v);
            ASSERT_NEAR(dist(s, u, h), beta * d, 1e-9) << s.name();
            ASSERT_NEAR(dist(s, h, v), (1.0 - beta) * d, 1e-9) << s.name();
        }
    }
}

TEST(Metric, ShippedSpacesPass) {
    for (const auto& s : shipped_spaces()) {
        for (const auto& r : check_metric(s, 10000, 42, 1e-9)) EXPECT_TRUE(r.holds()) << s.name() << " " << r.property;
    }
}

TEST(Axioms, ShippedSpacesPass) {
    for (const auto& s : shipped_spaces()) {
        const auto rs = check_axioms(s, 10000, 42, 1e-9);
        ASSERT_EQ(rs.size(), 4u);
        for (const auto& r : rs) {
            EXPECT_TRUE(r.holds()) << s.name() << " " << r.property << " margin " << r.worst_margin;
            EXPECT_EQ(r.samples_checked, 10000u);
        }
    }
}

TEST(Axioms, AffineCombinationOnDiskBreaksGeodesicScaling) {
    const auto broken = SpaceInstance::poincare_disk().with_combine(
        "disk-affine", [](const Point& u, const Point& v, double beta) {
            return Point{u[0] + beta * (v[0] - u[0]), u[1] + beta * (v[1] - u[1])};
        });
    const auto rs = check_axioms(broken, 10000, 42, 1e-9);
    const auto& ii = find(rs, "axiom_ii_geodesic_scaling");
    ASSERT_FALSE(ii.holds());
    ASSERT_FALSE(ii.witnesses.empty());
    // replay the worst witness
    const auto& w = ii.witnesses.front();
    const Point u(w.get_vector("u")), v(w.get_vector("v"));
    const double beta = w.get("beta"), gamma = w.get("gamma");
    const auto disk = SpaceInstance::poincare_disk();
    const Point hb = broken.custom_combine()(u, v, beta), hg = broken.custom_combine()(u, v, gamma);
    const double margin = -std::abs(dist(disk, hb, hg) - std::abs(beta - gamma) * dist(disk, u, v));
    EXPECT_LT(margin, -1e-9);
    EXPECT_NEAR(margin, ii.worst_margin, 1e-12);
}

TEST(Axioms, RejectsZeroSamples) {
    EXPECT_THROW(check_axioms(SpaceInstance::euclidean(2), 0, 1, 1e-9), PreconditionError);
}

TEST(Modulus, HilbertClosedForm) {
    EXPECT_DOUBLE_EQ(hilbert_modulus(1, 2), 1.0);
    EXPECT_NEAR(hilbert_modulus(1, 1), 0.1339746, 1e-7);
    EXPECT_EQ(hilbert_modulus(5, 1), hilbert_modulus(1, 1));
    EXPECT_THROW(hilbert_modulus(1, 0), DomainError);
    EXPECT_THROW(hilbert_modulus(1, 2.5), DomainError);
    EXPECT_THROW(hilbert_modulus(0, 1), DomainError);
}

TEST(Modulus, SampledPlaneMatchesClosedForm) {
    const auto s = SpaceInstance::euclidean(2);
    const Point a{0.0, 0.0};
    const double ref = 1.0 - std::sqrt(0.75);
    for (double r : {0.5, 1.0, 2.0}) {
        const double est = modulus_sampled(s, {r, 1.0, 10000, 42}, a);
        EXPECT_GE(est, ref - 1e-6) << r;
        EXPECT_LE(est, ref + 1e-2) << r;
    }
}

TEST(Modulus, AntipodalGivesOne) {
    for (const auto& s : {SpaceInstance::euclidean(1), SpaceInstance::euclidean(3)}) {
        const Point a = s.make_point(std::vector<double>(s.dimension(), 0.0));
        EXPECT_NEAR(modulus_sampled(s, {1.0, 2.0, 2000, 42}, a), 1.0, 1e-9) << s.name();
    }
}

TEST(Modulus, LineIsHalfEpsilon) {
    const auto s = SpaceInstance::euclidean(1);
    EXPECT_NEAR(modulus_sampled(s, {1.0, 1.0, 5000, 42}, Point{0.0}), 0.5, 1e-9);
}

TEST(Modulus, GridMatchesHilbert) {
    const auto s = parse_space("l2grid:32");
    const Point a = s.make_point(std::vector<double>(32, 0.0));
    const double est = modulus_sampled(s, {1.0, 1.0, 5000, 42}, a);
    EXPECT_GE(est, hilbert_modulus(1, 1) - 1e-6);
    EXPECT_LE(est, hilbert_modulus(1, 1) + 1e-2);
}

TEST(Modulus, DiskIsPositive) {
    const auto s = SpaceInstance::poincare_disk();
    const double est = modulus_sampled(s, {1.0, 1.0, 5000, 42}, Point{0.0, 0.0});
    EXPECT_GT(est, 0.0);
    EXPECT_LE(est, 1.0);
}

TEST(Modulus, Deterministic) {
    const auto s = SpaceInstance::euclidean(3);
    const Point a{0.1, 0.2, 0.3};
    EXPECT_EQ(modulus_sampled(s, {1.0, 0.7, 3000, 9}, a), modulus_sampled(s, {1.0, 0.7, 3000, 9}, a));
}

TEST(Space, ParseTokens) {
    EXPECT_EQ(parse_space("euclidean:3").dimension(), 3u);
    EXPECT_EQ(parse_space("poincare").kind(), SpaceKind::poincare_disk);
    EXPECT_EQ(parse_space("l2grid:16").dimension(), 16u);
    EXPECT_THROW(parse_space("sphere"), DomainError);
    EXPECT_THROW(parse_space("euclidean:0"), DomainError);
}
