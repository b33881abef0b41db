#include "fplab/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fplab/errors.hpp"

namespace fplab {

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::mann: return "mann";
        case SchemeKind::thakur: return "thakur";
        case SchemeKind::picard: return "picard";
    }
    return "unknown";
}
std::string_view to_string(YnVariant v) { return v == YnVariant::tz ? "tz" : "tx"; }
std::string_view to_string(Termination t) {
    return t == Termination::tol_reached ? "tol-reached" : "max-iter";
}

SchemeKind parse_scheme_kind(std::string_view token) {
    if (token == "mann") return SchemeKind::mann;
    if (token == "thakur" || token == "sahu") return SchemeKind::thakur;
    if (token == "picard") return SchemeKind::picard;
    throw DomainError("unknown scheme '" + std::string(token) + "'");
}

YnVariant parse_yn_variant(std::string_view token) {
    if (token == "tz") return YnVariant::tz;
    if (token == "tx") return YnVariant::tx;
    throw DomainError("yn variant must be 'tz' or 'tx'");
}

Coefficients Coefficients::constant(double value) { return Coefficients({value}); }

Coefficients Coefficients::table(std::vector<double> values) {
    if (values.empty()) throw DomainError("coefficient table is empty");
    return Coefficients(std::move(values));
}

double Coefficients::at(std::size_t n) const {
    if (n == 0) throw DomainError("coefficient sequences are indexed from n = 1");
    const double v = values_[std::min(n, values_.size()) - 1];
    if (!(v > 0.0 && v < 1.0)) {
        throw DomainError("coefficient at n = " + std::to_string(n) + " lies outside (0,1)");
    }
    return v;
}

std::vector<double> IterationTrace::residuals() const {
    std::vector<double> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.residual);
    return out;
}

namespace {

void require_open_unit(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) throw DomainError(std::string("coefficient ") + name + " must lie in (0,1)");
}

Point image(const MappingSpec& m, const Point& x, std::size_t step) {
    Point tx = m.apply(x);
    if (!tx.all_finite()) throw NumericError("non-finite image under " + m.name, step);
    if (!m.domain.contains(m.space, tx)) {
        std::string where;
        if (tx.size() == 1) where = " at T(x) = " + std::to_string(tx[0]);
        throw DomainEscapeError("mapping " + m.name + " left its domain" + where, step);
    }
    return tx;
}

ThakurStep thakur_step(const SpaceInstance& space, const MappingSpec& m, const Point& x, const Point& tx,
                       double a, double b, double c, YnVariant variant, std::size_t step) {
    Point z = combine(space, x, tx, c);
    Point tz = image(m, z, step);
    Point y = combine(space, z, variant == YnVariant::tz ? tz : tx, b);
    Point ty = image(m, y, step);
    Point next = combine(space, tz, ty, a);
    return {std::move(next), std::move(z), std::move(y)};
}

}  // namespace

Point step_mann(const SpaceInstance& space, const MappingSpec& m, const Point& x, double a) {
    require_open_unit(a, "a");
    if (!m.domain.contains(space, x)) throw DomainError("mann step: x outside the mapping's domain");
    return combine(space, x, image(m, x, 0), a);
}

ThakurStep step_thakur(const SpaceInstance& space, const MappingSpec& m, const Point& x, double a,
                       double b, double c, YnVariant variant) {
    require_open_unit(a, "a");
    require_open_unit(b, "b");
    require_open_unit(c, "c");
    if (!m.domain.contains(space, x)) throw DomainError("three-step scheme: x outside the mapping's domain");
    return thakur_step(space, m, x, image(m, x, 0), a, b, c, variant, 0);
}

IterationTrace run_scheme(const SpaceInstance& space, const MappingSpec& m, const SchemeParams& params,
                          const OrderRel* rel) {
    if (params.max_iter == 0) throw DomainError("max_iter must be at least 1");
    if (params.stop_tol && !(*params.stop_tol >= 0.0)) throw DomainError("stop tolerance must be nonnegative");
    if (!m.domain.contains(space, params.x1)) throw DomainError("start point outside the mapping's domain");

    IterationTrace trace;
    trace.params = params;

    std::optional<bool> increasing;  // direction of the order chain, if any
    Point x = params.x1;
    Point tx = image(m, x, 1);
    if (rel != nullptr) {
        if (leq(*rel, x, tx)) {
            increasing = true;
        } else if (leq(*rel, tx, x)) {
            increasing = false;
        }
    }

    for (std::size_t n = 1;; ++n) {
        StepRecord rec;
        rec.n = n;
        rec.residual = dist(space, x, tx);
        if (params.p) rec.dist_to_p = dist(space, x, *params.p);
        if (n <= params.point_cap) rec.x = x;

        const bool converged = params.stop_tol && rec.residual <= *params.stop_tol;
        if (converged || n == params.max_iter) {
            if (increasing) rec.order_chain_ok = *increasing ? leq(*rel, x, tx) : leq(*rel, tx, x);
            trace.steps.push_back(std::move(rec));
            trace.termination = converged ? Termination::tol_reached : Termination::max_iter;
            trace.final_point = x;
            return trace;
        }

        Point next;
        if (params.kind == SchemeKind::mann) {
            next = combine(space, x, tx, params.a.at(n));
        } else if (params.kind == SchemeKind::picard) {
            next = tx;
        } else {
            ThakurStep s = thakur_step(space, m, x, tx, params.a.at(n), params.b.at(n), params.c.at(n),
                                       params.yn_variant, n);
            if (n <= params.point_cap) {
                rec.z = std::move(s.z);
                rec.y = std::move(s.y);
            }
            next = std::move(s.x_next);
        }
        if (!next.all_finite()) throw NumericError("non-finite iterate", n + 1);

        if (increasing) {
            const Point& lo = *increasing ? x : next;
            const Point& hi = *increasing ? next : x;
            if (params.kind != SchemeKind::thakur) {
                // x_n <= x_{n+1} <= T x_n (reversed when decreasing)
                rec.order_chain_ok = *increasing ? (leq(*rel, lo, hi) && leq(*rel, next, tx))
                                                 : (leq(*rel, lo, hi) && leq(*rel, tx, next));
            } else {
                // x_n <= T x_n <= x_{n+1} (reversed when decreasing)
                rec.order_chain_ok = *increasing ? (leq(*rel, x, tx) && leq(*rel, tx, next))
                                                 : (leq(*rel, next, tx) && leq(*rel, tx, x));
            }
        }
        trace.steps.push_back(std::move(rec));
        x = std::move(next);
        tx = image(m, x, n + 1);
    }
}

PropertyReport check_fejer(const IterationTrace& trace) {
    if (!trace.params.p) throw PreconditionError("Fejer check needs a known fixed point p");
    ReportBuilder report("fejer_monotone", 1e-12);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        const double prev = *trace.steps[i - 1].dist_to_p;
        const double cur = *trace.steps[i].dist_to_p;
        report.record(prev - cur, [&] {
            return Witness{}
                .add("n", static_cast<double>(trace.steps[i].n))
                .add("dist_prev", prev)
                .add("dist_next", cur);
        });
    }
    return std::move(report).finish();
}

PropertyReport check_residual_decay(const IterationTrace& trace) {
    ReportBuilder report("residual_decay", 0.0);
    const auto r = trace.residuals();
    if (r.empty()) return std::move(report).finish();
    const double min_all = *std::min_element(r.begin(), r.end());
    if (trace.termination == Termination::tol_reached && trace.params.stop_tol) {
        const double tol = *trace.params.stop_tol;
        report.record(tol - min_all, [&] {
            return Witness{}.add("min_residual", min_all).add("stop_tol", tol);
        });
    }
    const std::size_t quarter = std::max<std::size_t>(1, r.size() / 4);
    const double first = *std::min_element(r.begin(), r.begin() + quarter);
    const double last = *std::min_element(r.end() - quarter, r.end());
    report.record(first - last, [&] {
        return Witness{}
            .add("window", static_cast<double>(quarter))
            .add("min_first_quarter", first)
            .add("min_last_quarter", last);
    });
    return std::move(report).finish();
}

PropertyReport check_order_chain(const IterationTrace& trace) {
    ReportBuilder report("order_chain", 0.0);
    for (const auto& s : trace.steps) {
        if (!s.order_chain_ok) continue;
        report.record(*s.order_chain_ok ? 0.0 : -1.0,
                      [&] { return Witness{}.add("n", static_cast<double>(s.n)); });
    }
    return std::move(report).finish();
}

std::vector<double> dist_to_fixed_set(const SpaceInstance& space, const IterationTrace& trace,
                                      std::span<const Point> fixed_set) {
    if (fixed_set.empty()) throw PreconditionError("distance to an empty fixed-point set");
    std::vector<double> out;
    out.reserve(trace.steps.size());
    for (const auto& s : trace.steps) {
        if (!s.x) throw PreconditionError("trace step " + std::to_string(s.n) + " has no stored point");
        out.push_back(dist_to_set(space, *s.x, fixed_set));
    }
    return out;
}

double asymptotic_radius(std::span<const Point> tail, const Point& x, const SpaceInstance& space) {
    if (tail.empty()) throw PreconditionError("asymptotic radius of an empty tail");
    double r = 0.0;
    for (const Point& p : tail) r = std::max(r, dist(space, p, x));
    return r;
}

std::pair<Point, double> asymptotic_center_estimate(std::span<const Point> tail,
                                                    std::span<const Point> candidates,
                                                    const SpaceInstance& space) {
    if (candidates.empty()) throw PreconditionError("asymptotic center needs candidates");
    std::size_t best = 0;
    double best_r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double r = asymptotic_radius(tail, candidates[i], space);
        if (r < best_r) {
            best_r = r;
            best = i;
        }
    }
    return {candidates[best], best_r};
}

}  // namespace fplab
