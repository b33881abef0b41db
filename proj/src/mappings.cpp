#include "fplab/mappings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fplab/errors.hpp"

namespace fplab {

Domain Domain::interval(double lo, double hi) { return box({lo}, {hi}); }

Domain Domain::box(std::vector<double> lo, std::vector<double> hi) {
    if (lo.size() != hi.size()) throw DomainError("box bounds differ in dimension");
    Domain d;
    d.kind = Kind::box;
    d.lo = std::move(lo);
    d.hi = std::move(hi);
    return d;
}

Domain Domain::ball(Point center, double radius) {
    if (!(radius >= 0.0)) throw DomainError("ball radius must be nonnegative");
    Domain d;
    d.kind = Kind::ball;
    d.center = std::move(center);
    d.radius = radius;
    return d;
}

Domain Domain::whole() { return Domain{}; }

bool Domain::contains(const SpaceInstance& space, const Point& p) const {
    if (!space.contains(p)) return false;
    switch (kind) {
        case Kind::whole: return true;
        case Kind::box:
            if (p.size() != lo.size()) return false;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (!(p[i] >= lo[i] && p[i] <= hi[i])) return false;
            }
            return true;
        case Kind::ball: return dist(space, p, center) <= radius * (1.0 + 1e-12);
    }
    return false;
}

std::string Domain::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::whole: os << "whole space"; break;
        case Kind::box:
            if (lo.size() == 1) {
                os << "[" << lo[0] << ", " << hi[0] << "]";
            } else {
                os << "box of dimension " << lo.size();
            }
            break;
        case Kind::ball: os << "closed ball of radius " << radius; break;
    }
    return os.str();
}

bool DeclaredClasses::declares_gen_alpha(double alpha) const {
    return std::any_of(gen_alpha.begin(), gen_alpha.end(),
                       [&](const auto& entry) { return entry.first == alpha && entry.second; });
}

std::vector<Point> interval_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) throw DomainError("interval grid needs lo <= hi and step > 0");
    std::vector<Point> out;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= count; ++i) {
        const double x = lo + static_cast<double>(i) * step;
        if (x < hi) out.push_back(Point{x});
    }
    out.push_back(Point{hi});
    return out;
}

namespace {

void ensure_included(std::vector<Point>& points, const Point& p) {
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
}

MappingSpec scalar_map(std::string name, std::string description, double lo, double hi,
                       std::function<double(double)> f, std::vector<double> fixed, double step = 0.01) {
    MappingSpec m{.name = std::move(name),
                  .description = std::move(description),
                  .space = SpaceInstance::euclidean(1),
                  .domain = Domain::interval(lo, hi),
                  .apply = [f = std::move(f)](const Point& x) { return Point{f(x[0])}; },
                  .fixed_points = {},
                  .fixed_set_finite = true,
                  .declared = {},
                  .sample_points = interval_grid(lo, hi, step)};
    for (double p : fixed) {
        m.fixed_points.push_back(Point{p});
        ensure_included(m.sample_points, Point{p});
    }
    return m;
}

Gauge half_gauge() {
    return {"h(r)=r/2", [](double r) { return 0.5 * r; }};
}

}  // namespace

MappingSpec jump_map() {
    MappingSpec m = scalar_map(
        "jump", "T(x) = 0 for x != 4, T(4) = 2 on [0,4]", 0.0, 4.0,
        [](double x) { return x == 4.0 ? 2.0 : 0.0; }, {0.0});
    ensure_included(m.sample_points, Point{4.0});
    m.declared.monotone = true;
    m.declared.condition_c = false;
    m.declared.gen_alpha = {{1.0 / 3.0, true}, {0.0, false}};
    m.declared.quasi_nonexpansive = true;
    m.declared.condition_i = half_gauge();
    return m;
}

MappingSpec half_shift_map() {
    MappingSpec m = scalar_map("half_shift", "T(x) = (x + 1)/2 on [0,1]", 0.0, 1.0,
                               [](double x) { return 0.5 * (x + 1.0); }, {1.0});
    m.declared.monotone = true;
    m.declared.condition_c = true;
    m.declared.gen_alpha = {{0.0, true}};
    m.declared.quasi_nonexpansive = true;
    m.declared.condition_i = half_gauge();
    return m;
}

MappingSpec reflection_map() {
    MappingSpec m = scalar_map("reflection", "T(x) = 1 - x on [0,1]", 0.0, 1.0,
                               [](double x) { return 1.0 - x; }, {0.5});
    m.declared.monotone = false;
    m.declared.condition_c = true;
    m.declared.quasi_nonexpansive = true;
    return m;
}

MappingSpec halving_map() {
    MappingSpec m = scalar_map("halving", "T(x) = x/2 on [0,1]", 0.0, 1.0,
                               [](double x) { return 0.5 * x; }, {0.0});
    m.declared.monotone = true;
    m.declared.condition_c = true;
    m.declared.gen_alpha = {{0.0, true}};
    m.declared.quasi_nonexpansive = true;
    m.declared.condition_i = half_gauge();
    return m;
}

MappingSpec identity_map() {
    MappingSpec m = scalar_map("identity", "T(x) = x on [0,1]", 0.0, 1.0,
                               [](double x) { return x; }, {});
    m.fixed_points = m.sample_points;
    m.declared.monotone = true;
    m.declared.condition_c = true;
    m.declared.gen_alpha = {{0.0, true}, {1.0 / 3.0, true}, {0.5, true}};
    m.declared.quasi_nonexpansive = true;
    m.declared.condition_i = Gauge{"h(r)=r", [](double r) { return r; }};
    return m;
}

MappingSpec doubling_map() {
    MappingSpec m = scalar_map("doubling", "T(x) = min(2x, 1) on [0,1]", 0.0, 1.0,
                               [](double x) { return std::min(2.0 * x, 1.0); }, {0.0, 1.0});
    m.declared.monotone = true;
    m.declared.condition_c = false;
    m.declared.quasi_nonexpansive = false;
    return m;
}

std::vector<std::string> catalog_names() {
    return {"jump", "half_shift", "reflection", "halving", "identity", "doubling"};
}

MappingSpec find_mapping(const std::string& name) {
    if (name == "jump") return jump_map();
    if (name == "half_shift") return half_shift_map();
    if (name == "reflection") return reflection_map();
    if (name == "halving") return halving_map();
    if (name == "identity") return identity_map();
    if (name == "doubling") return doubling_map();
    throw DomainError("unknown mapping '" + name + "'");
}

MappingSpec piecewise_polynomial_map(std::string name, double lo, double hi,
                                     std::vector<PolynomialPiece> pieces,
                                     std::vector<double> fixed_points, double grid_step) {
    if (pieces.empty()) throw DomainError("piecewise map needs at least one piece");
    for (const auto& piece : pieces) {
        if (piece.coeffs.empty() || !(piece.lo <= piece.hi)) {
            throw DomainError("piecewise map: malformed piece");
        }
    }
    auto eval = [pieces = std::move(pieces)](double x) {
        for (const auto& piece : pieces) {
            if (x >= piece.lo && x <= piece.hi) {
                double acc = 0.0;
                for (auto c = piece.coeffs.rbegin(); c != piece.coeffs.rend(); ++c) acc = acc * x + *c;
                return acc;
            }
        }
        return std::numeric_limits<double>::quiet_NaN();
    };
    return scalar_map(std::move(name), "piecewise polynomial", lo, hi, std::move(eval),
                      std::move(fixed_points), grid_step);
}

// Checks -------------------------------------------------------------------

double dist_to_set(const SpaceInstance& space, const Point& x, std::span<const Point> set) {
    if (set.empty()) throw PreconditionError("distance to an empty set");
    double best = std::numeric_limits<double>::infinity();
    for (const Point& p : set) best = std::min(best, dist(space, x, p));
    return best;
}

namespace {

constexpr double kSlack = 1e-12;

std::vector<Point> images(const MappingSpec& m, std::span<const Point> points) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const Point& x : points) out.push_back(m.apply(x));
    return out;
}

// Calls f(i, j) for every ordered pair of distinct indices whose points are
// comparable under rel.
template <class F>
void for_comparable_pairs(const OrderRel& rel, std::span<const Point> points, F&& f) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i != j && comparable(rel, points[i], points[j])) f(i, j);
        }
    }
}

Witness pair_witness(const Point& x, const Point& y, const Point& tx, const Point& ty) {
    Witness w;
    w.add("x", x).add("y", y).add("Tx", tx).add("Ty", ty);
    return w;
}

}  // namespace

std::vector<PropertyReport> check_mapping_consistency(const MappingSpec& m,
                                                      std::span<const Point> points) {
    ReportBuilder into("maps_domain_into_itself", 0.0);
    for (const Point& x : points) {
        if (!m.domain.contains(m.space, x)) continue;
        const Point tx = m.apply(x);
        into.record(m.domain.contains(m.space, tx) ? 0.0 : -1.0,
                    [&] { return Witness{}.add("x", x).add("Tx", tx); });
    }
    ReportBuilder fixed("declared_fixed_points", kSlack);
    for (const Point& p : m.fixed_points) {
        const Point tp = m.apply(p);
        const double r = m.space.contains(tp) ? dist(m.space, p, tp)
                                              : std::numeric_limits<double>::infinity();
        fixed.record(-r, [&] { return Witness{}.add("p", p).add("Tp", tp).add("residual", r); });
    }
    std::vector<PropertyReport> out;
    out.push_back(std::move(into).finish());
    out.push_back(std::move(fixed).finish());
    return out;
}

PropertyReport check_monotone(const MappingSpec& m, const OrderRel& rel, std::span<const Point> points) {
    const auto tx = images(m, points);
    const bool coordinate_order =
        rel.kind() == OrderKind::coordinatewise || rel.kind() == OrderKind::pointwise;
    ReportBuilder report("monotone", 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j || !leq(rel, points[i], points[j])) continue;
            double margin = 0.0;
            if (coordinate_order) {
                margin = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k < tx[i].size(); ++k) margin = std::min(margin, tx[j][k] - tx[i][k]);
            } else {
                margin = leq(rel, tx[i], tx[j]) ? 0.0 : -1.0;
            }
            report.record(margin, [&] { return pair_witness(points[i], points[j], tx[i], tx[j]); });
        }
    }
    return std::move(report).finish();
}

PropertyReport check_condition_C(const MappingSpec& m, std::span<const Point> points) {
    const auto tx = images(m, points);
    const SpaceInstance& s = m.space;
    std::vector<double> residual(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) residual[i] = dist(s, points[i], tx[i]);
    ReportBuilder report("condition_C", kSlack);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            const double dxy = dist(s, points[i], points[j]);
            if (!(0.5 * residual[i] <= dxy)) continue;
            const double lhs = dist(s, tx[i], tx[j]);
            report.record(dxy - lhs, [&] {
                return pair_witness(points[i], points[j], tx[i], tx[j]).add("lhs", lhs).add("rhs", dxy);
            });
        }
    }
    return std::move(report).finish();
}

PropertyReport check_gen_alpha(const MappingSpec& m, double alpha, const OrderRel& rel,
                               std::span<const Point> points) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0,1)");
    const auto tx = images(m, points);
    const SpaceInstance& s = m.space;
    std::vector<double> residual(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) residual[i] = dist(s, points[i], tx[i]);
    ReportBuilder report("gen_alpha_nonexpansive", kSlack);
    for_comparable_pairs(rel, points, [&](std::size_t i, std::size_t j) {
        const double dxy = dist(s, points[i], points[j]);
        if (!(0.5 * residual[i] <= dxy)) return;
        const double lhs = dist(s, tx[i], tx[j]);
        const double rhs = alpha * dist(s, tx[i], points[j]) + alpha * dist(s, points[i], tx[j]) +
                           (1.0 - 2.0 * alpha) * dxy;
        report.record(rhs - lhs, [&] {
            return pair_witness(points[i], points[j], tx[i], tx[j]).add("alpha", alpha).add("lhs", lhs).add("rhs", rhs);
        });
    });
    PropertyReport r = std::move(report).finish();
    return r;
}

PropertyReport check_quasi_nonexpansive(const MappingSpec& m, const OrderRel& rel,
                                        std::span<const Point> points) {
    if (m.fixed_points.empty()) {
        throw PreconditionError("quasi-nonexpansiveness needs a declared fixed point");
    }
    const SpaceInstance& s = m.space;
    ReportBuilder report("quasi_nonexpansive", kSlack);
    for (const Point& x : points) {
        const Point tx = m.apply(x);
        for (const Point& p : m.fixed_points) {
            if (!comparable(rel, x, p)) continue;
            const double lhs = dist(s, tx, p);
            const double rhs = dist(s, x, p);
            report.record(rhs - lhs, [&] {
                return Witness{}.add("x", x).add("Tx", tx).add("p", p).add("lhs", lhs).add("rhs", rhs);
            });
        }
    }
    return std::move(report).finish();
}

PropertyReport check_residual_transfer_bound(const MappingSpec& m, double alpha, const OrderRel& rel,
                                  std::span<const Point> points) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0,1)");
    if (!m.declared.declares_gen_alpha(alpha)) {
        throw PreconditionError("mapping '" + m.name + "' does not declare the generalized alpha class for this alpha");
    }
    const double coef = (3.0 + alpha) / (1.0 - alpha);
    const auto tx = images(m, points);
    const SpaceInstance& s = m.space;
    ReportBuilder report("residual_transfer_bound", kSlack);
    for_comparable_pairs(rel, points, [&](std::size_t i, std::size_t j) {
        const double lhs = dist(s, points[i], tx[j]);
        const double rhs = coef * dist(s, points[i], tx[i]) + dist(s, points[i], points[j]);
        report.record(rhs - lhs, [&] {
            return pair_witness(points[i], points[j], tx[i], tx[j]).add("alpha", alpha).add("lhs", lhs).add("rhs", rhs);
        });
    });
    return std::move(report).finish();
}

PropertyReport check_condition_I(const MappingSpec& m, const Gauge& h, std::span<const Point> points) {
    if (!m.fixed_set_finite || m.fixed_points.empty()) {
        throw UnsupportedError("condition (I) needs a finite, nonempty declared fixed set");
    }
    const SpaceInstance& s = m.space;
    ReportBuilder report("condition_I", kSlack);
    for (const Point& x : points) {
        const Point tx = m.apply(x);
        const double lhs = dist(s, x, tx);
        const double d = dist_to_set(s, x, m.fixed_points);
        const double rhs = h.h(d);
        report.record(lhs - rhs, [&] {
            return Witness{}.add("x", x).add("Tx", tx).add("dist_to_fixed_set", d).add("lhs", lhs).add("rhs", rhs);
        });
    }
    return std::move(report).finish();
}

}  // namespace fplab
