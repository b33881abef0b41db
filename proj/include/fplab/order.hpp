#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "fplab/geodesic.hpp"
#include "fplab/point.hpp"
#include "fplab/property_report.hpp"

namespace fplab {

enum class OrderKind {
    coordinatewise,  ///< R^n: every coordinate
    pointwise,       ///< grid functions: every quadrature node
    none,            ///< the space carries no order
    custom,          ///< test fixtures only
};

std::string_view to_string(OrderKind kind);

/// A partial order on the points of one space instance. The two concrete
/// orders compare stored doubles exactly; no tolerance is applied, since a
/// tolerant comparison is not antisymmetric.
class OrderRel {
public:
    using Predicate = std::function<bool(const Point&, const Point&)>;

    /// The shipped order for a space: coordinatewise on R^n, pointwise on grid
    /// functions, none on the disk.
    static OrderRel for_space(const SpaceInstance& space);
    static OrderRel none(const SpaceInstance& space);
    static OrderRel custom(const SpaceInstance& space, std::string name, Predicate leq);

    OrderKind kind() const noexcept { return kind_; }
    const SpaceInstance& space() const noexcept { return space_; }
    const std::string& name() const noexcept { return name_; }

    bool leq(const Point& u, const Point& v) const;

private:
    OrderRel(OrderKind kind, SpaceInstance space, std::string name, Predicate pred);

    OrderKind kind_;
    SpaceInstance space_;
    std::string name_;
    Predicate custom_;
};

/// Throws UnsupportedError for OrderKind::none and DomainError for points
/// outside the order's space.
bool leq(const OrderRel& rel, const Point& u, const Point& v);
bool comparable(const OrderRel& rel, const Point& u, const Point& v);

/// Samples anchors a, members u, v of [a, ->) and beta in [0,1], and asserts
/// H(u, v, beta) stays in [a, ->); dually for (<-, a]. A violation's witness
/// records the anchor, the two members, beta, the combination and the
/// interval direction (+1 up, -1 down).
PropertyReport check_interval_convexity(const OrderRel& rel, const SpaceInstance& space,
                                        std::size_t sample_count, std::uint64_t rng_seed);

}  // namespace fplab
