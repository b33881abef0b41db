#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fplab {

enum class QuadratureRule { trapezoid, gauss_legendre };

std::string_view to_string(QuadratureRule rule);
/// Accepts "trapezoid" and "gauss-legendre" (also "gauss_legendre", "gl").
QuadratureRule parse_quadrature_rule(std::string_view token);

/// Nodes in [0,1], strictly increasing; positive weights normalized to sum 1.
struct QuadratureGrid {
    QuadratureRule rule = QuadratureRule::trapezoid;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Grid functions hold a handle and are compared by handle identity or, when
/// two grids were built independently, by (rule, nodes, weights).
using GridHandle = std::shared_ptr<const QuadratureGrid>;

/// Throws DomainError for n < 2.
GridHandle build_grid(std::size_t n, QuadratureRule rule);

bool same_grid(const GridHandle& a, const GridHandle& b);

}  // namespace fplab
