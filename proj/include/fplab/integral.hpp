#pragma once

// Nystrom discretization of
//
//     x(t) = y0(t) + int_0^1 B(t, z, x(z)) dz,   t in [0,1],
//
// on a quadrature grid, with the pointwise order on grid functions and the
// weighted L2 norm. A problem is solved twice, by Picard iteration and by the
// three-step scheme, and the two answers are compared.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fplab/geodesic.hpp"
#include "fplab/mappings.hpp"
#include "fplab/point.hpp"
#include "fplab/property_report.hpp"
#include "fplab/quadrature.hpp"
#include "fplab/schemes.hpp"

namespace fplab {

/// Pointwise kernel b(t, z, s) with growth data: |B| <= f(t,z) + M ||x||.
struct KernelSpec {
    std::string name;
    std::function<double(double, double, double)> b;
    std::function<double(double, double)> f;
    double growth_m = 0.0;
};

/// b(t,z,s) = scale t z + M s/(1+s) for s >= 0 (M sigma(0) below), with
/// f(t,z) = scale t z + M.
KernelSpec default_kernel(double m = 0.4, double f_scale = 1.0);
/// b(t,z,s) = slope max(s, 0), f = 0, M = slope.
KernelSpec linear_kernel(double slope = 0.25);
/// b = 0.
KernelSpec zero_kernel();
/// Kernel by catalog name: "default", "linear", "zero", "steep" (slope 2, a
/// negative fixture). `m` is the growth constant / slope where it applies.
KernelSpec find_kernel(const std::string& name, double m, double f_scale);

/// Analytic description of a problem, from which it can be discretized at any
/// resolution.
struct ProblemSpec {
    std::string kernel = "default";
    double growth_m = 0.4;
    double f_scale = 1.0;
    /// y0(t) = c0 + c1 t + c2 t^2 + ...
    std::vector<double> y0 = {0.0, 1.0};
    std::size_t nodes = 64;
    QuadratureRule rule = QuadratureRule::trapezoid;
    /// Radius of C = {||x|| <= r}; nonpositive picks 2(||y0|| + ||int f||) + 1.
    double radius = 0.0;
};

struct IntegralProblem {
    GridHandle grid;
    KernelSpec kernel;
    GridFunction y0;
    double radius = 0.0;
    SpaceInstance space;

    /// ||y0|| + || int_0^1 f(., z) dz || on the grid.
    double radius_floor() const;
};

IntegralProblem build_problem(const ProblemSpec& spec);

/// sqrt(sum_i w_i x_i^2)
double l2_norm(const GridFunction& x);

/// (Tx)_i = y0_i + sum_j w_j b(t_i, t_j, x_j). Throws NumericError on a
/// non-finite kernel value.
GridFunction apply_operator(const IntegralProblem& p, const GridFunction& x);

/// The operator as a self-map of C in the l2_grid space.
MappingSpec operator_mapping(const IntegralProblem& p);

/// Kernel and operator hypotheses on sampled data:
///   kernel_nonnegative, kernel_monotone, kernel_lipschitz (pointwise
///   b(v) - b(u) <= v - u for u <= v), growth_constant (M < 1/2),
///   growth_bound (||Tx - y0|| <= ||int f|| + M ||x||), operator_maps_ball,
///   operator_monotone, operator_nonexpansive (slack 1e-10),
///   operator_above_y0.
std::vector<PropertyReport> check_solvability_hypotheses(const IntegralProblem& p, std::size_t sample_count,
                                         std::uint64_t rng_seed);

bool all_hold(const std::vector<PropertyReport>& reports);

struct IntegralSolution {
    GridFunction x;
    IterationTrace trace;
    std::size_t iterations = 0;
    /// ||x - Tx|| at the returned iterate.
    double residual = 0.0;
};

/// x_1 = y0, x_{n+1} = T x_n until ||x_{n+1} - x_n|| <= tol. Every iterate is
/// checked to be pointwise >= its predecessor and inside C; a violation throws
/// InvariantError. Throws NonConvergenceError after max_iter steps.
IntegralSolution solve_picard(const IntegralProblem& p, double tol, std::size_t max_iter);

/// Runs the three-step scheme on T from params.x1 (y0 when params.x1 is
/// empty) until ||x_n - T x_n|| <= tol. `reference`, when given, becomes the
/// trace's fixed point p for dist_to_p.
IntegralSolution solve_thakur(const IntegralProblem& p, SchemeParams params, double tol,
                              const GridFunction* reference = nullptr);

enum class SolverKind { picard, thakur };

/// L2 grid-norm difference between the solution at N nodes, linearly
/// interpolated to the nodes of the 2N solution, and the 2N solution.
double refine_check(const ProblemSpec& spec, SolverKind solver, double tol = 1e-12,
                    std::size_t max_iter = 10000);

/// Piecewise-linear interpolation of a grid function at arbitrary t, with
/// linear extrapolation outside the outermost nodes.
double interpolate(const GridFunction& x, double t);

}  // namespace fplab
