#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fplab/geodesic.hpp"
#include "fplab/order.hpp"
#include "fplab/point.hpp"
#include "fplab/property_report.hpp"

namespace fplab {

/// Region C of a space that a mapping sends into itself.
struct Domain {
    enum class Kind { box, ball, whole };

    Kind kind = Kind::whole;
    std::vector<double> lo;
    std::vector<double> hi;
    Point center;
    double radius = 0.0;

    static Domain interval(double lo, double hi);
    static Domain box(std::vector<double> lo, std::vector<double> hi);
    static Domain ball(Point center, double radius);
    static Domain whole();

    /// Box bounds are exact; ball membership allows 1e-12 relative round-off.
    bool contains(const SpaceInstance& space, const Point& p) const;
    std::string describe() const;
};

/// Gauge h for condition (I): nondecreasing, h(0) = 0, h(r) > 0 for r > 0.
struct Gauge {
    std::string name;
    std::function<double(double)> h;
};

/// Mapping classes a catalog entry claims (true) or disclaims (false).
/// Unset entries are not asserted either way.
struct DeclaredClasses {
    std::optional<bool> monotone;
    std::optional<bool> condition_c;
    std::vector<std::pair<double, bool>> gen_alpha;
    std::optional<bool> quasi_nonexpansive;
    std::optional<Gauge> condition_i;

    bool declares_gen_alpha(double alpha) const;
};

struct MappingSpec {
    std::string name;
    std::string description;
    SpaceInstance space;
    Domain domain;
    std::function<Point(const Point&)> apply;
    /// Finite list of fixed points; `fixed_set_finite` false means the list is
    /// unknown or not exhaustive.
    std::vector<Point> fixed_points;
    bool fixed_set_finite = true;
    DeclaredClasses declared;
    /// Default sample set used by the checks and the CLI: an exhaustive grid of
    /// the domain for scalar maps, always containing the declared fixed points
    /// and any points the mapping's behaviour is concentrated at.
    std::vector<Point> sample_points;

    Point operator()(const Point& x) const { return apply(x); }
};

/// x in [lo, hi] on lo, lo+step, ..., with hi itself always included.
std::vector<Point> interval_grid(double lo, double hi, double step);

// Catalog ------------------------------------------------------------------

/// T(x) = 0 for x != 4, T(4) = 2 on [0,4]. Unique fixed point 0; not a
/// (C)-mapping; satisfies the generalized alpha-nonexpansive inequality for
/// alpha >= 1/3 on comparable pairs; monotone (nondecreasing).
MappingSpec jump_map();
/// T(x) = (x + 1)/2 on [0,1], fixed point 1.
MappingSpec half_shift_map();
/// T(x) = 1 - x on [0,1], fixed point 1/2; an isometry that reverses order.
MappingSpec reflection_map();
/// T(x) = x/2 on [0,1], fixed point 0.
MappingSpec halving_map();
/// T(x) = x on [0,1]; fixed set is treated as the 0.01 grid of [0,1].
MappingSpec identity_map();
/// T(x) = min(2x, 1) on [0,1], fixed points {0, 1}.
MappingSpec doubling_map();

std::vector<std::string> catalog_names();
/// Throws DomainError for unknown names.
MappingSpec find_mapping(const std::string& name);

/// Scalar map on [lo, hi] given by polynomial pieces; the first piece whose
/// closed interval contains x applies.
struct PolynomialPiece {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> coeffs;  ///< c0 + c1 x + c2 x^2 + ...
};

MappingSpec piecewise_polynomial_map(std::string name, double lo, double hi,
                                     std::vector<PolynomialPiece> pieces,
                                     std::vector<double> fixed_points, double grid_step = 0.01);

// Checks -------------------------------------------------------------------

/// T(C) within C on the samples, and every declared fixed point satisfies
/// dist(p, Tp) <= 1e-12.
std::vector<PropertyReport> check_mapping_consistency(const MappingSpec& m,
                                                      std::span<const Point> points);

/// Tx <= Ty for every sampled x <= y (x != y).
PropertyReport check_monotone(const MappingSpec& m, const OrderRel& rel, std::span<const Point> points);

/// 1/2 rho(x,Tx) <= rho(x,y) implies rho(Tx,Ty) <= rho(x,y), on every ordered
/// pair of distinct sample points; slack 1e-12.
PropertyReport check_condition_C(const MappingSpec& m, std::span<const Point> points);

/// On every comparable pair, in both orientations, with 1/2 rho(x,Tx) <= rho(x,y):
///   rho(Tx,Ty) <= a rho(Tx,y) + a rho(x,Ty) + (1 - 2a) rho(x,y)
/// with slack 1e-12. Margins are rhs - lhs. Throws DomainError unless
/// 0 <= alpha < 1.
PropertyReport check_gen_alpha(const MappingSpec& m, double alpha, const OrderRel& rel,
                               std::span<const Point> points);

/// rho(Tx,p) <= rho(x,p) for every declared fixed point p and every sample x
/// comparable with it. Throws PreconditionError for an empty fixed set.
PropertyReport check_quasi_nonexpansive(const MappingSpec& m, const OrderRel& rel,
                                        std::span<const Point> points);

/// rho(x,Ty) <= (3 + a)/(1 - a) rho(x,Tx) + rho(x,y) on comparable pairs.
/// Requires the mapping to declare the generalized alpha-nonexpansive class
/// for this alpha.
PropertyReport check_residual_transfer_bound(const MappingSpec& m, double alpha, const OrderRel& rel,
                                  std::span<const Point> points);

/// rho(x,Tx) >= h(d(x, F)) with d(x, F) the minimum over the declared fixed
/// points. Throws UnsupportedError if the fixed set is not finite and known.
PropertyReport check_condition_I(const MappingSpec& m, const Gauge& h, std::span<const Point> points);

/// min over F of rho(x, p). Throws PreconditionError for empty F.
double dist_to_set(const SpaceInstance& space, const Point& x, std::span<const Point> set);

}  // namespace fplab
