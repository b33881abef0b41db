// Acceptance run: one PASS/FAIL line per criterion; nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fplab/cli/commands.hpp"
#include "fplab/geodesic.hpp"
#include "fplab/integral.hpp"
#include "fplab/mappings.hpp"
#include "fplab/schemes.hpp"

using namespace fplab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, {out, err});
    return {code, out.str()};
}

const PropertyReport* find(const std::vector<PropertyReport>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.property == name) return &r;
    }
    return nullptr;
}

Outcome table1() {
    Outcome o;
    const auto r = cli({"table1"});
    o.require(r.code == 0, "exit code " + std::to_string(r.code));
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    o.require(line == "n,mann,sahu", "header");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::istringstream cells(line);
        std::string n, m, s;
        std::getline(cells, n, ',');
        std::getline(cells, m, ',');
        std::getline(cells, s, ',');
        const int k = std::stoi(n);
        const double mann = std::stod(m), sahu = std::stod(s);
        const double published = cli::kPublishedMann[k - 1];
        const double closed = 0.9 * std::pow(0.15, k - 1);
        o.require(std::abs(mann - published) <= 1e-4 * published, "row " + n + " vs published");
        o.require(std::abs(mann - closed) <= 1e-12 * closed, "row " + n + " vs closed form");
        o.require(k == 1 ? sahu == 0.9 : sahu == 0.0, "row " + n + " three-step column");
    }
    o.require(rows == 20, "row count");
    return o;
}

Outcome classification() {
    Outcome o;
    const auto m = jump_map();
    const auto rel = OrderRel::for_space(m.space);
    bool has_four = false;
    for (const auto& p : m.sample_points) has_four = has_four || p[0] == 4.0;
    o.require(has_four && m.sample_points.size() == 401, "sample grid");

    const auto c = check_condition_C(m, m.sample_points);
    o.require(!c.holds() && !c.witnesses.empty(), "condition (C) not refuted");
    if (!c.witnesses.empty()) {
        const auto& w = c.witnesses.front();
        const double x = w.get("x"), y = w.get("y");
        const double tx = m(Point{x})[0], ty = m(Point{y})[0];
        const bool triggered = 0.5 * std::abs(x - tx) <= std::abs(x - y);
        const double margin = std::abs(x - y) - std::abs(tx - ty);
        o.require(triggered && margin < -1e-12 && margin <= c.worst_margin + 1e-15, "witness replay");
    }
    const auto g = check_gen_alpha(m, 1.0 / 3.0, rel, m.sample_points);
    o.require(g.holds() && g.worst_margin >= -1e-12, "gen-alpha(1/3) violated");

    const auto r = cli({"properties", "--mapping", "jump"});
    o.require(r.code == 0, "properties exit code " + std::to_string(r.code));
    return o;
}

Outcome modulus() {
    Outcome o;
    const auto s = SpaceInstance::euclidean(2);
    const Point a{0.0, 0.0};
    const double ref = 1.0 - std::sqrt(0.75);
    std::vector<double> est;
    for (double r : {0.5, 1.0, 2.0}) est.push_back(modulus_sampled(s, {r, 1.0, 100000, 42}, a));
    o.require(est[1] >= ref - 1e-6 && est[1] <= ref + 1e-2, "r=1 estimate " + std::to_string(est[1]));
    const auto [lo, hi] = std::minmax_element(est.begin(), est.end());
    o.require(*hi - *lo <= 2e-2, "r spread");
    return o;
}

Outcome axioms() {
    Outcome o;
    for (const std::string token : {"euclidean:1", "euclidean:2", "poincare", "l2grid:64"}) {
        for (const auto& r : check_axioms(parse_space(token), 10000, 42, 1e-9)) {
            o.require(r.holds() && r.samples_checked == 10000, token + " " + r.property);
        }
    }
    const auto broken = SpaceInstance::poincare_disk().with_combine(
        "disk-affine", [](const Point& u, const Point& v, double beta) {
            return Point{u[0] + beta * (v[0] - u[0]), u[1] + beta * (v[1] - u[1])};
        });
    const auto rs = check_axioms(broken, 10000, 42, 1e-9);
    const auto* ii = find(rs, "axiom_ii_geodesic_scaling");
    o.require(ii && !ii->holds() && !ii->witnesses.empty(), "broken combination passes axiom (ii)");
    return o;
}

Outcome scheme_diagnostics() {
    Outcome o;
    const auto m = half_shift_map();
    const auto rel = OrderRel::for_space(m.space);
    for (auto [kind, limit] : {std::pair{SchemeKind::mann, std::size_t{200}}, std::pair{SchemeKind::thakur, std::size_t{60}}}) {
        SchemeParams p;
        p.kind = kind;
        p.x1 = Point{0.0};
        p.p = Point{1.0};
        p.max_iter = limit;
        p.stop_tol = 1e-10;
        const auto t = run_scheme(m.space, m, p, &rel);
        const std::string k(to_string(kind));
        o.require(check_order_chain(t).holds(), k + " order chain");
        o.require(check_fejer(t).holds(), k + " Fejer");
        o.require(t.steps.back().residual <= 1e-10, k + " residual after " + std::to_string(t.steps.size()));
    }
    return o;
}

Outcome integral_equation() {
    Outcome o;
    const ProblemSpec spec;
    const auto p = build_problem(spec);
    o.require(all_hold(check_solvability_hypotheses(p, 1000, 42)), "hypotheses");
    const auto picard = solve_picard(p, 1e-10, 10000);
    SchemeParams params;
    const auto thakur = solve_thakur(p, params, 1e-10, &picard.x);
    o.require(dist(p.space, picard.x, apply_operator(p, picard.x)) <= 1e-8, "Picard residual");
    o.require(dist(p.space, thakur.x, apply_operator(p, thakur.x)) <= 1e-8, "three-step residual");
    const auto& steps = picard.trace.steps;
    for (std::size_t n = 1; n < steps.size(); ++n) {
        for (std::size_t i = 0; i < p.grid->size(); ++i) {
            if ((*steps[n - 1].x)[i] > (*steps[n].x)[i]) o.require(false, "Picard iterate decreased");
        }
    }
    o.require(dist(p.space, picard.x, thakur.x) <= 1e-6, "gap");
    o.require(refine_check(spec, SolverKind::picard) <= 1e-3, "refine 64->128");

    ProblemSpec lin;
    lin.kernel = "linear";
    lin.growth_m = 0.25;
    lin.y0 = {1.0};
    const auto ls = solve_picard(build_problem(lin), 1e-12, 10000);
    for (std::size_t i = 0; i < ls.x.size(); ++i) {
        if (std::abs(ls.x[i] - 4.0 / 3.0) > 1e-9) {
            o.require(false, "linear kernel differs from 4/3");
            break;
        }
    }
    return o;
}

Outcome hierarchy() {
    Outcome o;
    for (const auto& name : catalog_names()) {
        const auto m = find_mapping(name);
        const auto rel = OrderRel::for_space(m.space);
        const auto& pts = m.sample_points;
        if (check_condition_C(m, pts).holds()) {
            o.require(check_gen_alpha(m, 0.0, rel, pts).holds(), name + ": (C) without gen-alpha(0)");
        }
        bool some_alpha = false;
        for (double alpha : {0.0, 0.25, 1.0 / 3.0, 0.5, 0.75}) some_alpha = some_alpha || check_gen_alpha(m, alpha, rel, pts).holds();
        bool comparable_fixed = false;
        for (const auto& p : m.fixed_points) {
            for (const auto& x : pts) comparable_fixed = comparable_fixed || comparable(rel, x, p);
        }
        if (some_alpha && comparable_fixed) {
            o.require(check_quasi_nonexpansive(m, rel, pts).holds(), name + ": gen-alpha without quasi-nonexpansive");
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"table1"},
        {"race", "--mapping", "jump"},
        {"race", "--mapping", "half_shift", "--x1", "0", "--p", "1"},
        {"properties", "--mapping", "jump"},
        {"space-check", "--space", "poincare", "--samples", "2000"},
        {"space-check", "--space", "l2grid:16", "--samples", "2000"},
        {"integral"},
    };
    for (const auto& c : commands) {
        const auto a = cli(c), b = cli(c);
        o.require(a.code == b.code && a.out == b.out, c[0] + " differs between runs");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 table reproduction", 1.0, table1},
        {"2 jump map classification", 10.0, classification},
        {"3 convexity modulus", 30.0, modulus},
        {"4 space axioms", 0.0, axioms},
        {"5 scheme diagnostics", 0.0, scheme_diagnostics},
        {"6 integral equation", 10.0, integral_equation},
        {"7 class hierarchy", 0.0, hierarchy},
        {"8 determinism", 0.0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) o.require(false, "over time budget");
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << secs << " s)";
        if (!o.ok) std::cout << "  " << o.detail;
        std::cout << '\n';
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
