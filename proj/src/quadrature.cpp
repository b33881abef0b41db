#include "fplab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fplab/errors.hpp"

namespace fplab {

std::string_view to_string(QuadratureRule rule) {
    switch (rule) {
        case QuadratureRule::trapezoid: return "trapezoid";
        case QuadratureRule::gauss_legendre: return "gauss-legendre";
    }
    return "unknown";
}

QuadratureRule parse_quadrature_rule(std::string_view token) {
    if (token == "trapezoid") return QuadratureRule::trapezoid;
    if (token == "gauss-legendre" || token == "gauss_legendre" || token == "gl") {
        return QuadratureRule::gauss_legendre;
    }
    throw DomainError("unknown quadrature rule '" + std::string(token) + "'");
}

namespace {

void trapezoid(std::size_t n, QuadratureGrid& g) {
    const double h = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        g.nodes[i] = (i + 1 == n) ? 1.0 : static_cast<double>(i) * h;
        g.weights[i] = (i == 0 || i + 1 == n) ? 0.5 * h : h;
    }
}

// Newton iteration on P_n from the Chebyshev-like initial guess; nodes come out
// descending on [-1,1] and are mirrored into ascending order on [0,1].
void gauss_legendre(std::size_t n, QuadratureGrid& g) {
    const double nd = static_cast<double>(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kd = static_cast<double>(k);
                const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x > 0 here; map +-x to [0,1].
        g.nodes[i] = 0.5 * (1.0 - x);
        g.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        g.weights[i] = 0.5 * w;
        g.weights[n - 1 - i] = 0.5 * w;
    }
}

}  // namespace

GridHandle build_grid(std::size_t n, QuadratureRule rule) {
    if (n < 2) throw DomainError("quadrature grid needs at least 2 nodes");
    auto g = std::make_shared<QuadratureGrid>();
    g->rule = rule;
    g->nodes.resize(n);
    g->weights.resize(n);
    if (rule == QuadratureRule::trapezoid) {
        trapezoid(n, *g);
    } else {
        gauss_legendre(n, *g);
    }
    const double total = std::accumulate(g->weights.begin(), g->weights.end(), 0.0);
    for (double& w : g->weights) w /= total;
    return g;
}

bool same_grid(const GridHandle& a, const GridHandle& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->rule == b->rule && a->nodes == b->nodes && a->weights == b->weights;
}

}  // namespace fplab
