#include "fplab/geodesic.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>

#include "fplab/errors.hpp"
#include "fplab/simd/kernels.hpp"

namespace fplab {

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::euclidean: return "euclidean";
        case SpaceKind::poincare_disk: return "poincare";
        case SpaceKind::l2_grid: return "l2grid";
    }
    return "unknown";
}

SpaceInstance::SpaceInstance(SpaceKind kind, std::size_t dim, GridHandle grid, std::string name)
    : kind_(kind), dim_(dim), grid_(std::move(grid)), name_(std::move(name)) {}

SpaceInstance SpaceInstance::euclidean(std::size_t dim) {
    if (dim == 0) throw DomainError("euclidean space needs dimension >= 1");
    return SpaceInstance(SpaceKind::euclidean, dim, nullptr, "euclidean:" + std::to_string(dim));
}

SpaceInstance SpaceInstance::poincare_disk() {
    return SpaceInstance(SpaceKind::poincare_disk, 2, nullptr, "poincare");
}

SpaceInstance SpaceInstance::l2_grid(GridHandle grid) {
    if (!grid) throw DomainError("l2grid space needs a quadrature grid");
    const std::size_t n = grid->size();
    return SpaceInstance(SpaceKind::l2_grid, n, std::move(grid), "l2grid:" + std::to_string(n));
}

SpaceInstance SpaceInstance::with_combine(std::string name, CombineFn combine) const {
    SpaceInstance copy = *this;
    copy.name_ = std::move(name);
    copy.combine_override_ = std::move(combine);
    return copy;
}

bool SpaceInstance::contains(const Point& p) const {
    if (p.size() != dim_ || !p.all_finite()) return false;
    switch (kind_) {
        case SpaceKind::euclidean: return !p.on_grid();
        case SpaceKind::poincare_disk: {
            const double limit = 1.0 - kDiskMargin;
            return !p.on_grid() && std::hypot(p[0], p[1]) <= limit;
        }
        case SpaceKind::l2_grid: return p.on_grid() && same_grid(p.grid(), grid_);
    }
    return false;
}

void SpaceInstance::require_member(const Point& p) const {
    if (contains(p)) return;
    if (p.size() != dim_) {
        throw DomainError(name_ + ": point has " + std::to_string(p.size()) +
                          " coordinates, expected " + std::to_string(dim_));
    }
    if (!p.all_finite()) throw DomainError(name_ + ": point has non-finite coordinates");
    if (kind_ == SpaceKind::poincare_disk) {
        throw DomainError("poincare: point on or outside the disk boundary");
    }
    if (kind_ == SpaceKind::l2_grid) throw DomainError(name_ + ": grid function from another grid");
    throw DomainError(name_ + ": grid function passed to a coordinate space");
}

Point SpaceInstance::make_point(std::vector<double> coords) const {
    if (kind_ == SpaceKind::l2_grid) return Point(grid_, std::move(coords));
    return Point(std::move(coords));
}

SpaceInstance parse_space(std::string_view token) {
    auto parse_count = [&](std::string_view digits) -> std::size_t {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || value == 0) {
            throw DomainError("bad size in space token '" + std::string(token) + "'");
        }
        return value;
    };
    if (token == "poincare") return SpaceInstance::poincare_disk();
    if (token.starts_with("euclidean:")) {
        return SpaceInstance::euclidean(parse_count(token.substr(10)));
    }
    if (token.starts_with("l2grid:")) {
        return SpaceInstance::l2_grid(build_grid(parse_count(token.substr(7)), QuadratureRule::trapezoid));
    }
    throw DomainError("unknown space '" + std::string(token) + "'");
}

namespace {

using cplx = std::complex<double>;

cplx as_complex(const Point& p) { return {p[0], p[1]}; }
Point from_complex(cplx z) { return Point{z.real(), z.imag()}; }

// arcosh(1 + x) without cancellation for small x.
double acosh1p(double x) { return std::log1p(x + std::sqrt(x * (x + 2.0))); }

double disk_dist(cplx u, cplx v) {
    const double num = 2.0 * std::norm(u - v);
    const double den = (1.0 - std::norm(u)) * (1.0 - std::norm(v));
    return acosh1p(num / den);
}

// Mobius map sending a to 0 and its inverse.
cplx to_origin(cplx a, cplx w) { return (w - a) / (1.0 - std::conj(a) * w); }
cplx from_origin(cplx a, cplx w) { return (w + a) / (1.0 + std::conj(a) * w); }

cplx disk_combine(cplx u, cplx v, double beta) {
    const cplx w = to_origin(u, v);
    const double rw = std::abs(w);
    if (rw == 0.0) return u;
    const double target = std::tanh(beta * std::atanh(rw));
    return from_origin(u, (target / rw) * w);
}

// Unit vectors (weighted L2) spanning the canonical plane of a grid space: the
// constant function and the centred identity t - mean(t).
std::pair<std::vector<double>, std::vector<double>> grid_plane(const QuadratureGrid& g) {
    const std::size_t n = g.size();
    std::vector<double> e1(n, 1.0);
    std::vector<double> e2(g.nodes);
    const double mean = simd::active().dot(g.weights, g.nodes);
    for (double& t : e2) t -= mean;
    std::vector<double> zero(n, 0.0);
    const double norm = std::sqrt(simd::active().weighted_sq_dist(g.weights, e2, zero));
    for (double& t : e2) t /= norm;
    return {std::move(e1), std::move(e2)};
}

void require_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw DomainError("combination parameter beta must lie in [0,1]");
    }
}

}  // namespace

double dist(const SpaceInstance& space, const Point& u, const Point& v) {
    space.require_member(u);
    space.require_member(v);
    switch (space.kind()) {
        case SpaceKind::euclidean:
            if (space.dimension() == 1) return std::abs(u[0] - v[0]);
            return std::sqrt(simd::active().sq_dist(u.values(), v.values()));
        case SpaceKind::poincare_disk:
            if (u == v) return 0.0;
            return disk_dist(as_complex(u), as_complex(v));
        case SpaceKind::l2_grid:
            return std::sqrt(simd::active().weighted_sq_dist(space.grid()->weights, u.values(), v.values()));
    }
    return 0.0;
}

Point combine(const SpaceInstance& space, const Point& u, const Point& v, double beta) {
    require_beta(beta);
    space.require_member(u);
    space.require_member(v);
    if (space.has_custom_combine()) return space.custom_combine()(u, v, beta);
    if (beta == 0.0 || u == v) return u;
    if (beta == 1.0) return v;
    switch (space.kind()) {
        case SpaceKind::euclidean:
        case SpaceKind::l2_grid: {
            Point out = u;
            simd::active().lerp(u.values(), v.values(), beta, out.values());
            return out;
        }
        case SpaceKind::poincare_disk:
            return from_complex(disk_combine(as_complex(u), as_complex(v), beta));
    }
    return u;
}

Point sample_point(const SpaceInstance& space, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    switch (space.kind()) {
        case SpaceKind::euclidean:
        case SpaceKind::l2_grid: {
            std::vector<double> c(space.dimension());
            for (double& x : c) x = unit(rng);
            return space.make_point(std::move(c));
        }
        case SpaceKind::poincare_disk: {
            std::uniform_real_distribution<double> u01(0.0, 1.0);
            const double radius = kDiskSampleRadius * std::sqrt(u01(rng));
            const double angle = 2.0 * std::numbers::pi * u01(rng);
            return Point{radius * std::cos(angle), radius * std::sin(angle)};
        }
    }
    return {};
}

bool has_plane(const SpaceInstance& space) {
    return space.kind() == SpaceKind::poincare_disk || space.dimension() >= 2;
}

Point plane_point(const SpaceInstance& space, const Point& center, double angle, double distance) {
    space.require_member(center);
    switch (space.kind()) {
        case SpaceKind::euclidean: {
            Point p = center;
            if (space.dimension() == 1) {
                p[0] += std::cos(angle) >= 0.0 ? distance : -distance;
            } else {
                p[0] += distance * std::cos(angle);
                p[1] += distance * std::sin(angle);
            }
            return p;
        }
        case SpaceKind::poincare_disk: {
            const cplx dir = std::polar(std::tanh(0.5 * distance), angle);
            return from_complex(from_origin(as_complex(center), dir));
        }
        case SpaceKind::l2_grid: {
            const auto [e1, e2] = grid_plane(*space.grid());
            Point p = center;
            const double c = distance * std::cos(angle);
            const double s = distance * std::sin(angle);
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += c * e1[i] + s * e2[i];
            return p;
        }
    }
    return center;
}

Point sample_ball(const SpaceInstance& space, const Point& center, double radius,
                  std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    switch (space.kind()) {
        case SpaceKind::euclidean:
        case SpaceKind::l2_grid: {
            std::normal_distribution<double> gauss;
            const std::size_t n = space.dimension();
            std::vector<double> dir(n);
            for (double& x : dir) x = gauss(rng);
            std::vector<double> zero(n, 0.0);
            const double norm = space.kind() == SpaceKind::l2_grid
                                    ? std::sqrt(simd::active().weighted_sq_dist(space.grid()->weights, dir, zero))
                                    : std::sqrt(simd::active().sq_dist(dir, zero));
            const double shrink = space.kind() == SpaceKind::euclidean
                                      ? std::pow(u01(rng), 1.0 / static_cast<double>(n))
                                      : std::sqrt(u01(rng));
            Point p = center;
            const double scale = norm > 0.0 ? radius * shrink / norm : 0.0;
            for (std::size_t i = 0; i < n; ++i) p[i] += scale * dir[i];
            return p;
        }
        case SpaceKind::poincare_disk: {
            const double d = radius * std::sqrt(u01(rng));
            const double angle = 2.0 * std::numbers::pi * u01(rng);
            return plane_point(space, center, angle, d);
        }
    }
    return center;
}

std::vector<PropertyReport> check_metric(const SpaceInstance& space, std::size_t sample_count,
                                         std::uint64_t rng_seed, double tol) {
    std::mt19937_64 rng(rng_seed);
    ReportBuilder symmetry("metric_symmetry", 1e-12);
    ReportBuilder triangle("metric_triangle", tol);
    ReportBuilder identity("metric_identity", 0.0);
    for (std::size_t s = 0; s < sample_count; ++s) {
        const Point u = sample_point(space, rng);
        const Point v = sample_point(space, rng);
        const Point w = sample_point(space, rng);
        const double uv = dist(space, u, v);
        const double vu = dist(space, v, u);
        const double uw = dist(space, u, w);
        const double vw = dist(space, v, w);
        const double uu = dist(space, u, u);
        symmetry.record(-std::abs(uv - vu), [&] {
            return Witness{}.add("u", u).add("v", v).add("d_uv", uv).add("d_vu", vu);
        });
        triangle.record(uv + vw - uw, [&] {
            return Witness{}.add("u", u).add("v", v).add("w", w).add("d_uw", uw).add("d_uv_plus_d_vw", uv + vw);
        });
        identity.record(-uu, [&] { return Witness{}.add("u", u).add("d_uu", uu); });
    }
    std::vector<PropertyReport> out;
    out.push_back(std::move(symmetry).finish());
    out.push_back(std::move(triangle).finish());
    out.push_back(std::move(identity).finish());
    return out;
}

std::vector<PropertyReport> check_axioms(const SpaceInstance& space, std::size_t sample_count,
                                         std::uint64_t rng_seed, double tol) {
    if (sample_count == 0) throw PreconditionError("check_axioms needs sample_count >= 1");
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    ReportBuilder ax1("axiom_i_convexity", tol);
    ReportBuilder ax2("axiom_ii_geodesic_scaling", tol);
    ReportBuilder ax3("axiom_iii_symmetry", tol);
    ReportBuilder ax4("axiom_iv_joint_convexity", tol);

    for (std::size_t s = 0; s < sample_count; ++s) {
        const Point u = sample_point(space, rng);
        const Point v = sample_point(space, rng);
        const Point w = sample_point(space, rng);
        const Point z = sample_point(space, rng);
        const double beta = u01(rng);
        const double gamma = u01(rng);
        auto base = [&] {
            Witness wt;
            wt.add("u", u).add("v", v).add("w", w).add("z", z).add("beta", beta).add("gamma", gamma);
            return wt;
        };

        const Point huvb = combine(space, u, v, beta);
        {
            const double lhs = dist(space, z, huvb);
            const double rhs = (1.0 - beta) * dist(space, z, u) + beta * dist(space, z, v);
            ax1.record(rhs - lhs, [&] { return base().add("lhs", lhs).add("rhs", rhs); });
        }
        {
            const Point huvg = combine(space, u, v, gamma);
            const double lhs = dist(space, huvb, huvg);
            const double rhs = std::abs(beta - gamma) * dist(space, u, v);
            ax2.record(-std::abs(lhs - rhs), [&] { return base().add("lhs", lhs).add("rhs", rhs); });
        }
        {
            const Point hvu = combine(space, v, u, 1.0 - beta);
            const double gap = dist(space, huvb, hvu);
            ax3.record(-gap, [&] { return base().add("lhs", gap).add("rhs", 0.0); });
        }
        {
            const double lhs = dist(space, combine(space, u, z, beta), combine(space, v, w, beta));
            const double rhs = (1.0 - beta) * dist(space, u, v) + beta * dist(space, z, w);
            ax4.record(rhs - lhs, [&] { return base().add("lhs", lhs).add("rhs", rhs); });
        }
    }
    std::vector<PropertyReport> out;
    out.push_back(std::move(ax1).finish());
    out.push_back(std::move(ax2).finish());
    out.push_back(std::move(ax3).finish());
    out.push_back(std::move(ax4).finish());
    return out;
}

double hilbert_modulus(double r, double epsilon) {
    if (!(r > 0.0)) throw DomainError("modulus radius must be positive");
    if (!(epsilon > 0.0 && epsilon <= 2.0)) throw DomainError("modulus epsilon must lie in (0,2]");
    return 1.0 - std::sqrt(1.0 - 0.25 * epsilon * epsilon);
}

double modulus_sampled(const SpaceInstance& space, const ModulusQuery& q, const Point& center) {
    if (!(q.r > 0.0)) throw DomainError("modulus radius must be positive");
    if (!(q.epsilon > 0.0 && q.epsilon <= 2.0)) throw DomainError("modulus epsilon must lie in (0,2]");
    if (q.sample_count == 0) throw DomainError("modulus estimate needs sample_count >= 1");
    space.require_member(center);

    // Admissibility is tested with a relative round-off allowance so that the
    // boundary configurations built below (distance exactly r, separation
    // exactly r*eps) are not rejected by the last ulp.
    constexpr double rel = 1e-12;
    const double r = q.r;
    const double sep = r * q.epsilon;
    double best = std::numeric_limits<double>::infinity();
    std::size_t admissible = 0;

    auto consider = [&](const Point& u, const Point& v) {
        if (dist(space, u, center) > r * (1.0 + rel)) return;
        if (dist(space, v, center) > r * (1.0 + rel)) return;
        if (dist(space, u, v) < sep * (1.0 - rel)) return;
        ++admissible;
        const double value = 1.0 - dist(space, combine(space, u, v, 0.5), center) / r;
        best = std::min(best, value);
    };

    // Collinear pair through the centre.
    {
        const Point u = plane_point(space, center, 0.0, r);
        const Point v = q.epsilon <= 1.0 ? plane_point(space, center, 0.0, r - sep)
                                         : plane_point(space, center, std::numbers::pi, sep - r);
        consider(u, v);
    }
    // Symmetric pair on the sphere of radius r with separation r*eps. Flat
    // planes have the half-angle asin(eps/2); on the disk it is found by
    // bisection on the separation, which is increasing in the angle.
    if (has_plane(space) && space.kind() != SpaceKind::poincare_disk) {
        const double half = std::asin(0.5 * q.epsilon);
        consider(plane_point(space, center, half, r), plane_point(space, center, -half, r));
    } else if (has_plane(space)) {
        double lo = 0.0;
        double hi = 0.5 * std::numbers::pi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double d = dist(space, plane_point(space, center, mid, r), plane_point(space, center, -mid, r));
            (d >= sep ? hi : lo) = mid;
        }
        consider(plane_point(space, center, hi, r), plane_point(space, center, -hi, r));
    }

    std::mt19937_64 rng(q.rng_seed);
    for (std::size_t s = 0; s < q.sample_count; ++s) {
        const Point u = sample_ball(space, center, r, rng);
        const Point v = sample_ball(space, center, r, rng);
        consider(u, v);
    }
    if (admissible == 0) throw EstimationError("modulus estimate: no admissible pair sampled");
    return best;
}

}  // namespace fplab
