#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fplab/geodesic.hpp"
#include "fplab/mappings.hpp"
#include "fplab/order.hpp"
#include "fplab/point.hpp"
#include "fplab/property_report.hpp"

namespace fplab {

/// picard is x_{n+1} = T x_n (the a_n = 1 limit of Mann).
enum class SchemeKind { mann, thakur, picard };

/// Which image the middle step of the three-step scheme uses:
/// y_n = (1 - b_n) z_n (+) b_n T z_n (tz, default) or ... b_n T x_n (tx).
enum class YnVariant { tz, tx };

std::string_view to_string(SchemeKind kind);
std::string_view to_string(YnVariant v);
SchemeKind parse_scheme_kind(std::string_view token);
YnVariant parse_yn_variant(std::string_view token);

/// Coefficient sequence indexed from n = 1. Tabulated sequences repeat their
/// last entry past the end of the table.
class Coefficients {
public:
    static Coefficients constant(double value);
    static Coefficients table(std::vector<double> values);

    double at(std::size_t n) const;
    bool is_constant() const noexcept { return values_.size() == 1; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    explicit Coefficients(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> values_;
};

struct SchemeParams {
    SchemeKind kind = SchemeKind::thakur;
    Coefficients a = Coefficients::constant(0.85);
    Coefficients b = Coefficients::constant(0.65);
    Coefficients c = Coefficients::constant(0.45);
    Point x1;
    std::size_t max_iter = 100;
    /// Stop once dist(x_n, T x_n) <= stop_tol; unset runs to max_iter.
    std::optional<double> stop_tol;
    /// Known fixed point for the dist_to_p diagnostic.
    std::optional<Point> p;
    YnVariant yn_variant = YnVariant::tz;
    /// Full points are kept for the first `point_cap` steps only.
    std::size_t point_cap = 10000;
};

struct StepRecord {
    std::size_t n = 0;
    std::optional<Point> x;
    std::optional<Point> z;
    std::optional<Point> y;
    double residual = 0.0;
    std::optional<double> dist_to_p;
    /// Order chain of the scheme at step n (see run_scheme).
    std::optional<bool> order_chain_ok;
};

enum class Termination { tol_reached, max_iter };

std::string_view to_string(Termination t);

struct IterationTrace {
    SchemeParams params;
    std::vector<StepRecord> steps;
    Termination termination = Termination::max_iter;
    Point final_point;

    std::vector<double> residuals() const;
};

/// x_{n+1} = (1 - a) x_n (+) a T x_n.
Point step_mann(const SpaceInstance& space, const MappingSpec& m, const Point& x, double a);

struct ThakurStep {
    Point x_next;
    Point z;
    Point y;
};

/// z = (1-c) x (+) c Tx, y = (1-b) z (+) b Tz, x_next = (1-a) Tz (+) a Ty.
/// With YnVariant::tx the middle step uses Tx instead of Tz.
ThakurStep step_thakur(const SpaceInstance& space, const MappingSpec& m, const Point& x, double a,
                       double b, double c, YnVariant variant = YnVariant::tz);

/// Iterates the chosen scheme from params.x1. Record n holds x_n, its residual
/// dist(x_n, T x_n), dist(x_n, p) when p is given and, when an order is given
/// and x_1, T x_1 are comparable, whether the scheme's order chain holds:
///   three-step:  x_n <= T x_n <= x_{n+1}     (dually when T x_1 <= x_1)
///   Mann:        x_n <= x_{n+1} <= T x_n
///   Picard:      x_n <= T x_n == x_{n+1}
/// The final record checks x_n <= T x_n only.
/// Throws DomainEscapeError when T leaves the mapping's domain and
/// NumericError on non-finite iterates.
IterationTrace run_scheme(const SpaceInstance& space, const MappingSpec& m, const SchemeParams& params,
                          const OrderRel* rel = nullptr);

/// dist_to_p(n+1) <= dist_to_p(n) + 1e-12 for every n.
PropertyReport check_fejer(const IterationTrace& trace);

/// Residual decay on a finite trace: when stopped by tolerance, the smallest
/// residual is within it; and the smallest residual of the last quarter of the
/// trace does not exceed the smallest of the first quarter.
PropertyReport check_residual_decay(const IterationTrace& trace);

/// Every recorded order_chain_ok is true.
PropertyReport check_order_chain(const IterationTrace& trace);

/// Per-step min over F of dist(x_n, p). Needs the stored points.
std::vector<double> dist_to_fixed_set(const SpaceInstance& space, const IterationTrace& trace,
                                      std::span<const Point> fixed_set);

/// Finite-window stand-in for limsup dist(x_n, x): the maximum over the tail.
double asymptotic_radius(std::span<const Point> tail, const Point& x, const SpaceInstance& space);

/// Candidate minimising asymptotic_radius; ties go to the earliest candidate.
std::pair<Point, double> asymptotic_center_estimate(std::span<const Point> tail,
                                                    std::span<const Point> candidates,
                                                    const SpaceInstance& space);

}  // namespace fplab
