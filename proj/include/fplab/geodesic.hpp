#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/point.hpp"
#include "fplab/property_report.hpp"
#include "fplab/quadrature.hpp"

namespace fplab {

enum class SpaceKind { euclidean, poincare_disk, l2_grid };

std::string_view to_string(SpaceKind kind);

/// Points of the Poincare disk must satisfy |u| <= 1 - kDiskMargin.
inline constexpr double kDiskMargin = 1e-12;
/// Random disk samples are drawn with |u| <= kDiskSampleRadius.
inline constexpr double kDiskSampleRadius = 0.95;

/// A metric space with a convex-combination map H(u, v, beta), i.e. a
/// W-hyperbolic space. Three concrete instances ship: R^n with the Euclidean
/// norm, the Poincare disk with its hyperbolic metric, and grid functions on a
/// quadrature grid with the weighted L2 norm.
///
/// Instances are cheap value types. `with_combine` exists for negative test
/// fixtures that pair a metric with a wrong H.
class SpaceInstance {
public:
    using CombineFn = std::function<Point(const Point&, const Point&, double)>;

    static SpaceInstance euclidean(std::size_t dim);
    static SpaceInstance poincare_disk();
    static SpaceInstance l2_grid(GridHandle grid);

    SpaceInstance with_combine(std::string name, CombineFn combine) const;

    SpaceKind kind() const noexcept { return kind_; }
    /// Coordinate count: n for R^n, 2 for the disk, N for grid functions.
    std::size_t dimension() const noexcept { return dim_; }
    const GridHandle& grid() const noexcept { return grid_; }
    const std::string& name() const noexcept { return name_; }
    bool has_custom_combine() const noexcept { return static_cast<bool>(combine_override_); }
    const CombineFn& custom_combine() const noexcept { return combine_override_; }

    bool contains(const Point& p) const;
    /// Throws DomainError naming the violated condition.
    void require_member(const Point& p) const;

    /// Builds a point of this space from raw coordinates (binds the grid for
    /// l2_grid instances).
    Point make_point(std::vector<double> coords) const;

private:
    SpaceInstance(SpaceKind kind, std::size_t dim, GridHandle grid, std::string name);

    SpaceKind kind_;
    std::size_t dim_;
    GridHandle grid_;
    std::string name_;
    CombineFn combine_override_;
};

/// Parses "euclidean:<d>", "poincare" and "l2grid:<N>" (trapezoid grid).
SpaceInstance parse_space(std::string_view token);

double dist(const SpaceInstance& space, const Point& u, const Point& v);

/// H(u, v, beta) = (1 - beta)u (+) beta v: the point on the geodesic from u to
/// v at fraction beta of the way. Returns u for beta = 0, v for beta = 1 and u
/// when u == v, without evaluating the transported formulas.
Point combine(const SpaceInstance& space, const Point& u, const Point& v, double beta);

/// Random element of a bounded region of the space: [-1,1]^n for R^n, the
/// disk of Euclidean radius kDiskSampleRadius, grid functions with values in
/// [-1,1].
Point sample_point(const SpaceInstance& space, std::mt19937_64& rng);

/// Random point with dist(center, p) <= radius.
Point sample_ball(const SpaceInstance& space, const Point& center, double radius,
                  std::mt19937_64& rng);

/// True when the space has a canonical 2-plane through every point (every
/// shipped instance except R^1 and single-node grids).
bool has_plane(const SpaceInstance& space);

/// Point at distance `distance` from `center` along the geodesic leaving it at
/// `angle` inside the canonical plane. On spaces without a plane only angles
/// 0 and pi are meaningful (the two directions of the line).
Point plane_point(const SpaceInstance& space, const Point& center, double angle, double distance);

/// Symmetry (exact to 1e-12) and triangle inequality (to `tol`) on random
/// triples.
std::vector<PropertyReport> check_metric(const SpaceInstance& space, std::size_t sample_count,
                                         std::uint64_t rng_seed, double tol);

/// The four hyperbolic-space axioms on random (u, v, w, z, beta, gamma):
///   (i)   rho(z, H(u,v,b)) <= (1-b) rho(z,u) + b rho(z,v)
///   (ii)  rho(H(u,v,b), H(u,v,g)) == |b-g| rho(u,v)
///   (iii) H(u,v,b) == H(v,u,1-b)
///   (iv)  rho(H(u,z,b), H(v,w,b)) <= (1-b) rho(u,v) + b rho(z,w)
/// Returns one report per axiom, in that order.
std::vector<PropertyReport> check_axioms(const SpaceInstance& space, std::size_t sample_count,
                                         std::uint64_t rng_seed, double tol);

struct ModulusQuery {
    double r = 1.0;
    double epsilon = 1.0;
    std::size_t sample_count = 10000;
    std::uint64_t rng_seed = 42;
};

/// Sampled estimate of the modulus of uniform convexity at `center`: the
/// minimum of 1 - rho(mid(u,v), center)/r over admissible pairs
/// (rho(u,a) <= r, rho(v,a) <= r, rho(u,v) >= r eps). Always includes the
/// symmetric extremal pair and the collinear pair, so the estimate is tight in
/// inner-product spaces. Not clamped to (0,1].
double modulus_sampled(const SpaceInstance& space, const ModulusQuery& q, const Point& center);

/// 1 - sqrt(1 - eps^2/4). `r` is validated but does not enter the value.
double hilbert_modulus(double r, double epsilon);

}  // namespace fplab
