#pragma once

#include <cstddef>
#include <vector>

#include "breakline/errors.hpp"
#include "breakline/scalar_function.hpp"

namespace breakline {

/// Strictly increasing abscissa sequence x_1 < x_2 < ... < x_N, N >= 2.
/// The two endpoints are fixed at construction; only interior points can be
/// moved, and only in ways that preserve the strict ordering.
class BreakpointSet {
public:
    explicit BreakpointSet(std::vector<double> points) : pts_(std::move(points)) {
        if (pts_.size() < 2) {
            throw InvalidExplicit("a breakpoint set needs at least 2 points, got " +
                                  std::to_string(pts_.size()));
        }
        for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
            if (!(pts_[i] < pts_[i + 1])) {
                throw InvalidExplicit("breakpoints must be strictly increasing; violation at index " +
                                      std::to_string(i));
            }
        }
    }

    const std::vector<double>& points() const { return pts_; }
    double operator[](std::size_t i) const { return pts_[i]; }
    std::size_t size() const { return pts_.size(); }
    double front() const { return pts_.front(); }
    double back() const { return pts_.back(); }
    Interval range() const { return {pts_.front(), pts_.back()}; }

    /// Moves interior point i (0 < i < N-1). Throws NumericalCollapse when the
    /// new value would not sit strictly between its neighbors.
    void set_interior(std::size_t i, double x) {
        if (i == 0 || i + 1 >= pts_.size()) {
            throw InvalidExplicit("endpoints are immutable; index " + std::to_string(i));
        }
        if (!(pts_[i - 1] < x && x < pts_[i + 1])) {
            throw NumericalCollapse("update of x_" + std::to_string(i) + " to " +
                                    std::to_string(x) + " breaks strict ordering");
        }
        pts_[i] = x;
    }

    bool operator==(const BreakpointSet& other) const = default;

private:
    std::vector<double> pts_;
};

}  // namespace breakline
