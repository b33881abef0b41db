#include "fplab/integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fplab/errors.hpp"
#include "fplab/simd/kernels.hpp"

namespace fplab {

namespace {

// 1 - 1/(1+s) rather than s/(1+s): every operation is monotone under
// round-to-nearest, so the kernel is exactly nondecreasing in floating point.
double saturate(double s) { return 1.0 - 1.0 / (1.0 + s); }

double horner(const std::vector<double>& coeffs, double t) {
    double acc = 0.0;
    for (auto c = coeffs.rbegin(); c != coeffs.rend(); ++c) acc = acc * t + *c;
    return acc;
}

}  // namespace

KernelSpec default_kernel(double m, double f_scale) {
    return {"default",
            [m, f_scale](double t, double z, double s) { return f_scale * t * z + m * saturate(std::max(s, 0.0)); },
            [m, f_scale](double t, double z) { return f_scale * t * z + m; },
            m};
}

KernelSpec linear_kernel(double slope) {
    return {"linear", [slope](double, double, double s) { return slope * std::max(s, 0.0); },
            [](double, double) { return 0.0; }, slope};
}

KernelSpec zero_kernel() {
    return {"zero", [](double, double, double) { return 0.0; }, [](double, double) { return 0.0; }, 0.0};
}

KernelSpec find_kernel(const std::string& name, double m, double f_scale) {
    if (name == "default") return default_kernel(m, f_scale);
    if (name == "linear") return linear_kernel(m);
    if (name == "zero") return zero_kernel();
    if (name == "steep") {
        KernelSpec k = linear_kernel(2.0);
        k.name = "steep";
        return k;
    }
    throw DomainError("unknown kernel '" + name + "'");
}

double l2_norm(const GridFunction& x) {
    if (!x.on_grid()) throw DomainError("l2_norm needs a grid function");
    const auto& w = x.grid()->weights;
    return std::sqrt(simd::active().dot(w, [&] {
        std::vector<double> sq(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) sq[i] = x[i] * x[i];
        return sq;
    }()));
}

double IntegralProblem::radius_floor() const {
    const auto& g = *grid;
    std::vector<double> row(g.size());
    std::vector<double> fint(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) row[j] = kernel.f(g.nodes[i], g.nodes[j]);
        fint[i] = simd::active().dot(g.weights, row);
    }
    return l2_norm(y0) + l2_norm(GridFunction(grid, std::move(fint)));
}

IntegralProblem build_problem(const ProblemSpec& spec) {
    IntegralProblem p{.grid = build_grid(spec.nodes, spec.rule),
                      .kernel = find_kernel(spec.kernel, spec.growth_m, spec.f_scale),
                      .y0 = {},
                      .radius = 0.0,
                      .space = SpaceInstance::euclidean(1)};
    std::vector<double> y(p.grid->size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = horner(spec.y0, p.grid->nodes[i]);
    p.y0 = GridFunction(p.grid, std::move(y));
    p.space = SpaceInstance::l2_grid(p.grid);
    p.radius = spec.radius > 0.0 ? spec.radius : 2.0 * p.radius_floor() + 1.0;
    return p;
}

GridFunction apply_operator(const IntegralProblem& p, const GridFunction& x) {
    p.space.require_member(x);
    const auto& g = *p.grid;
    const std::size_t n = g.size();
    std::vector<double> out(n);
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) row[j] = p.kernel.b(g.nodes[i], g.nodes[j], x[j]);
        out[i] = p.y0[i] + simd::active().dot(g.weights, row);
        if (!std::isfinite(out[i])) throw NumericError("non-finite kernel evaluation", 0);
    }
    return GridFunction(p.grid, std::move(out));
}

MappingSpec operator_mapping(const IntegralProblem& p) {
    MappingSpec m{.name = "integral_operator",
                  .description = "Nystrom operator with kernel " + p.kernel.name,
                  .space = p.space,
                  .domain = Domain::ball(GridFunction(p.grid, std::vector<double>(p.grid->size(), 0.0)), p.radius),
                  .apply = [p](const Point& x) { return apply_operator(p, x); },
                  .fixed_points = {},
                  .fixed_set_finite = false,
                  .declared = {},
                  .sample_points = {}};
    m.declared.monotone = true;
    return m;
}

bool all_hold(const std::vector<PropertyReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds(); });
}

std::vector<PropertyReport> check_solvability_hypotheses(const IntegralProblem& p, std::size_t sample_count,
                                         std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss;
    const auto& k = p.kernel;
    const double span = 2.0 * p.radius;
    const std::size_t n = p.grid->size();

    ReportBuilder nonneg("kernel_nonnegative", 0.0);
    ReportBuilder mono("kernel_monotone", 0.0);
    ReportBuilder lip("kernel_lipschitz", 1e-12);
    for (std::size_t s = 0; s < sample_count; ++s) {
        const double t = u01(rng);
        const double z = u01(rng);
        const double x = span * u01(rng);
        const double bx = k.b(t, z, x);
        nonneg.record(bx, [&] { return Witness{}.add("t", t).add("z", z).add("s", x).add("b", bx); });

        double u = span * (2.0 * u01(rng) - 1.0);
        double v = span * (2.0 * u01(rng) - 1.0);
        if (v < u) std::swap(u, v);
        const double bu = k.b(t, z, u);
        const double bv = k.b(t, z, v);
        auto wit = [&] { return Witness{}.add("t", t).add("z", z).add("u", u).add("v", v).add("b_u", bu).add("b_v", bv); };
        mono.record(bv - bu, wit);
        lip.record((v - u) - (bv - bu), wit);
    }

    ReportBuilder growth_m("growth_constant", 0.0);
    growth_m.record(k.growth_m < 0.5 ? 0.5 - k.growth_m : std::min(0.5 - k.growth_m, -1e-300),
                    [&] { return Witness{}.add("M", k.growth_m).add("limit", 0.5); });

    const double fnorm = p.radius_floor() - l2_norm(p.y0);
    auto random_function = [&](double norm) {
        std::vector<double> v(n);
        for (double& e : v) e = gauss(rng);
        GridFunction f(p.grid, std::move(v));
        const double cur = l2_norm(f);
        const double scale = cur > 0.0 ? norm / cur : 0.0;
        for (double& e : f.values()) e *= scale;
        return f;
    };

    ReportBuilder growth("growth_bound", 1e-12);
    ReportBuilder maps("operator_maps_ball", 1e-12 * p.radius);
    ReportBuilder opmono("operator_monotone", 0.0);
    ReportBuilder nonexp("operator_nonexpansive", 1e-10);
    ReportBuilder above("operator_above_y0", 0.0);
    const SpaceInstance& sp = p.space;
    for (std::size_t s = 0; s < sample_count; ++s) {
        // Every eighth sample sits on the sphere ||x|| = r.
        const double norm = (s % 8 == 0) ? p.radius : p.radius * u01(rng);
        const GridFunction x = random_function(norm);
        const GridFunction tx = apply_operator(p, x);
        const double xnorm = l2_norm(x);
        const double txnorm = l2_norm(tx);
        const double dev = dist(sp, tx, p.y0);
        growth.record(fnorm + k.growth_m * xnorm - dev, [&] {
            return Witness{}.add("x", x).add("norm_Tx_minus_y0", dev).add("bound", fnorm + k.growth_m * xnorm);
        });
        maps.record(p.radius - txnorm, [&] { return Witness{}.add("x", x).add("norm_Tx", txnorm).add("r", p.radius); });
        double above_margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) above_margin = std::min(above_margin, tx[i] - p.y0[i]);
        above.record(above_margin, [&] { return Witness{}.add("x", x).add("Tx", tx); });

        GridFunction v = x;
        const double bump = p.radius * u01(rng);
        for (double& e : v.values()) e += bump * std::abs(gauss(rng));
        const GridFunction tv = apply_operator(p, v);
        double mono_margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) mono_margin = std::min(mono_margin, tv[i] - tx[i]);
        opmono.record(mono_margin, [&] { return Witness{}.add("u", x).add("v", v).add("Tu", tx).add("Tv", tv); });
        const double dvu = dist(sp, v, x);
        const double dtvu = dist(sp, tv, tx);
        nonexp.record(dvu - dtvu, [&] {
            return Witness{}.add("u", x).add("v", v).add("norm_v_minus_u", dvu).add("norm_Tv_minus_Tu", dtvu);
        });
    }

    std::vector<PropertyReport> out;
    out.push_back(std::move(nonneg).finish());
    out.push_back(std::move(mono).finish());
    out.push_back(std::move(lip).finish());
    out.push_back(std::move(growth_m).finish());
    out.push_back(std::move(growth).finish());
    out.push_back(std::move(maps).finish());
    out.push_back(std::move(opmono).finish());
    out.push_back(std::move(nonexp).finish());
    out.push_back(std::move(above).finish());
    return out;
}

IntegralSolution solve_picard(const IntegralProblem& p, double tol, std::size_t max_iter) {
    if (!(tol >= 0.0)) throw DomainError("tolerance must be nonnegative");
    if (max_iter == 0) throw DomainError("max_iter must be at least 1");
    const SpaceInstance& sp = p.space;

    IntegralSolution sol;
    sol.trace.params.kind = SchemeKind::picard;
    sol.trace.params.x1 = p.y0;
    sol.trace.params.max_iter = max_iter;
    sol.trace.params.stop_tol = tol;

    GridFunction x = p.y0;
    for (std::size_t n = 1; n <= max_iter; ++n) {
        GridFunction next = apply_operator(p, x);
        if (!simd::active().all_leq(x.values(), next.values())) {
            throw InvariantError("Picard iterate " + std::to_string(n + 1) +
                                 " is not pointwise above its predecessor; kernel violates the monotonicity hypotheses");
        }
        if (l2_norm(next) > p.radius * (1.0 + 1e-12)) {
            throw InvariantError("Picard iterate " + std::to_string(n + 1) + " left the ball of radius r");
        }
        const double step = dist(sp, x, next);
        StepRecord rec;
        rec.n = n;
        rec.residual = step;
        if (n <= sol.trace.params.point_cap) rec.x = x;
        rec.order_chain_ok = true;
        sol.trace.steps.push_back(std::move(rec));
        x = std::move(next);
        if (step <= tol) {
            sol.trace.termination = Termination::tol_reached;
            sol.iterations = n;
            sol.residual = dist(sp, x, apply_operator(p, x));
            sol.trace.final_point = x;
            sol.x = std::move(x);
            return sol;
        }
    }
    throw NonConvergenceError("Picard iteration did not reach the tolerance",
                              sol.trace.steps.empty() ? 0.0 : sol.trace.steps.back().residual);
}

IntegralSolution solve_thakur(const IntegralProblem& p, SchemeParams params, double tol,
                              const GridFunction* reference) {
    if (params.x1.size() == 0) params.x1 = p.y0;
    params.kind = SchemeKind::thakur;
    params.stop_tol = tol;
    if (reference != nullptr) params.p = *reference;
    const MappingSpec m = operator_mapping(p);
    IntegralSolution sol;
    sol.trace = run_scheme(p.space, m, params);
    if (sol.trace.termination != Termination::tol_reached) {
        throw NonConvergenceError("three-step scheme did not reach the tolerance", sol.trace.steps.back().residual);
    }
    sol.x = sol.trace.final_point;
    sol.iterations = sol.trace.steps.size();
    sol.residual = sol.trace.steps.back().residual;
    return sol;
}

double interpolate(const GridFunction& x, double t) {
    const auto& nodes = x.grid()->nodes;
    const std::size_t n = nodes.size();
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
    hi = std::clamp<std::size_t>(hi, 1, n - 1);
    const std::size_t lo = hi - 1;
    const double frac = (t - nodes[lo]) / (nodes[hi] - nodes[lo]);
    return x[lo] + frac * (x[hi] - x[lo]);
}

double refine_check(const ProblemSpec& spec, SolverKind solver, double tol, std::size_t max_iter) {
    auto solve = [&](std::size_t nodes) {
        ProblemSpec s = spec;
        s.nodes = nodes;
        const IntegralProblem p = build_problem(s);
        if (solver == SolverKind::picard) return solve_picard(p, tol, max_iter).x;
        SchemeParams params;
        params.max_iter = max_iter;
        return solve_thakur(p, params, tol).x;
    };
    const GridFunction coarse = solve(spec.nodes);
    const GridFunction fine = solve(2 * spec.nodes);
    std::vector<double> lifted(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) lifted[i] = interpolate(coarse, fine.grid()->nodes[i]);
    return dist(SpaceInstance::l2_grid(fine.grid()), GridFunction(fine.grid(), std::move(lifted)), fine);
}

}  // namespace fplab
