#include "fplab/point.hpp"

#include <cmath>

namespace fplab {

bool operator==(const Point& a, const Point& b) {
    if (a.on_grid() != b.on_grid()) return false;
    if (a.on_grid() && !same_grid(a.grid(), b.grid())) return false;
    return a.values_ == b.values_;
}

bool Point::all_finite() const noexcept {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace fplab
