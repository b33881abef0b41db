#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fplab/quadrature.hpp"

namespace fplab {

/// Element of a space instance. Euclidean points and disk points are plain
/// coordinate vectors (the disk uses two coordinates); grid functions carry
/// the handle of the quadrature grid their values live on.
class Point {
public:
    Point() = default;
    Point(std::initializer_list<double> coords) : values_(coords) {}
    explicit Point(std::vector<double> coords) : values_(std::move(coords)) {}
    Point(GridHandle grid, std::vector<double> values)
        : values_(std::move(values)), grid_(std::move(grid)) {}

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    const GridHandle& grid() const noexcept { return grid_; }
    bool on_grid() const noexcept { return static_cast<bool>(grid_); }

    /// Exact coordinate equality on the same carrier.
    friend bool operator==(const Point& a, const Point& b);

    bool all_finite() const noexcept;

private:
    std::vector<double> values_;
    GridHandle grid_;
};

/// A Point bound to a quadrature grid (x(t) sampled at the grid nodes).
using GridFunction = Point;

}  // namespace fplab
