#include "fplab/order.hpp"

#include <optional>
#include <random>

#include "fplab/errors.hpp"
#include "fplab/simd/kernels.hpp"

namespace fplab {

std::string_view to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::coordinatewise: return "coordinatewise";
        case OrderKind::pointwise: return "pointwise";
        case OrderKind::none: return "none";
        case OrderKind::custom: return "custom";
    }
    return "unknown";
}

OrderRel::OrderRel(OrderKind kind, SpaceInstance space, std::string name, Predicate pred)
    : kind_(kind), space_(std::move(space)), name_(std::move(name)), custom_(std::move(pred)) {}

OrderRel OrderRel::for_space(const SpaceInstance& space) {
    switch (space.kind()) {
        case SpaceKind::euclidean: return OrderRel(OrderKind::coordinatewise, space, "coordinatewise", {});
        case SpaceKind::l2_grid: return OrderRel(OrderKind::pointwise, space, "pointwise", {});
        case SpaceKind::poincare_disk: break;
    }
    return none(space);
}

OrderRel OrderRel::none(const SpaceInstance& space) {
    return OrderRel(OrderKind::none, space, "none", {});
}

OrderRel OrderRel::custom(const SpaceInstance& space, std::string name, Predicate leq) {
    return OrderRel(OrderKind::custom, space, std::move(name), std::move(leq));
}

bool OrderRel::leq(const Point& u, const Point& v) const {
    if (kind_ == OrderKind::none) {
        throw UnsupportedError("space " + space_.name() + " carries no partial order");
    }
    space_.require_member(u);
    space_.require_member(v);
    if (kind_ == OrderKind::custom) return custom_(u, v);
    return simd::active().all_leq(u.values(), v.values());
}

bool leq(const OrderRel& rel, const Point& u, const Point& v) { return rel.leq(u, v); }

bool comparable(const OrderRel& rel, const Point& u, const Point& v) {
    return rel.leq(u, v) || rel.leq(v, u);
}

namespace {

// A member of [anchor, ->) (direction +1) or (<-, anchor] (direction -1).
std::optional<Point> sample_member(const OrderRel& rel, const SpaceInstance& space, const Point& anchor,
                                   int direction, std::mt19937_64& rng) {
    if (rel.kind() == OrderKind::coordinatewise || rel.kind() == OrderKind::pointwise) {
        std::uniform_real_distribution<double> shift(0.0, 1.0);
        Point p = anchor;
        for (double& x : p.values()) x += direction * shift(rng);
        return p;
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Point p = sample_point(space, rng);
        const bool member = direction > 0 ? rel.leq(anchor, p) : rel.leq(p, anchor);
        if (member) return p;
    }
    return std::nullopt;
}

}  // namespace

PropertyReport check_interval_convexity(const OrderRel& rel, const SpaceInstance& space,
                                        std::size_t sample_count, std::uint64_t rng_seed) {
    if (rel.kind() == OrderKind::none) {
        throw UnsupportedError("interval convexity needs an order on " + space.name());
    }
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    ReportBuilder report("order_interval_convexity", 0.0);
    for (std::size_t s = 0; s < sample_count; ++s) {
        const Point anchor = sample_point(space, rng);
        for (int direction : {+1, -1}) {
            auto u = sample_member(rel, space, anchor, direction, rng);
            auto v = sample_member(rel, space, anchor, direction, rng);
            const double beta = u01(rng);
            if (!u || !v) continue;
            const Point h = combine(space, *u, *v, beta);
            const bool inside = direction > 0 ? rel.leq(anchor, h) : rel.leq(h, anchor);
            report.record(inside ? 0.0 : -1.0, [&] {
                return Witness{}
                    .add("direction", direction)
                    .add("a", anchor)
                    .add("u", *u)
                    .add("v", *v)
                    .add("beta", beta)
                    .add("combination", h);
            });
        }
    }
    return std::move(report).finish();
}

}  // namespace fplab
