#pragma once

#include <cmath>
#include <string>

#include "breakline/errors.hpp"

namespace breakline {

/// Bisection for a monotonically decreasing sign function g on (lo, hi) with
/// g > 0 on the left of the root and g < 0 on the right. Only interior
/// midpoints are evaluated, so endpoint singularities (e.g. an infinite
/// derivative at 0) are harmless. Returns the bracket midpoint once the
/// bracket is narrower than x_tol.
///
/// Throws NoConvergence, reporting the best bracket, if max_iter is exhausted
/// first or g evaluates to a non-finite value.
template <class F>
double bisect_decreasing(F&& g, double lo, double hi, double x_tol, int max_iter) {
    for (int i = 0; i < max_iter; ++i) {
        if (hi - lo <= x_tol) return 0.5 * (lo + hi);
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;  // bracket at machine resolution
        const double v = g(mid);
        if (!std::isfinite(v)) {
            throw NoConvergence("bisection hit a non-finite value at x=" + std::to_string(mid) +
                                ", bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "]");
        }
        if (v > 0.0) {
            lo = mid;
        } else if (v < 0.0) {
            hi = mid;
        } else {
            return mid;  // exact hit
        }
    }
    if (hi - lo <= x_tol) return 0.5 * (lo + hi);
    throw NoConvergence("bisection used all iterations; best bracket [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
}

/// Golden-section maximization of a unimodal function h on [lo, hi], to
/// abscissa tolerance x_tol. Returns the estimated maximizer.
template <class F>
double golden_max(F&& h, double lo, double hi, double x_tol, int max_iter) {
    constexpr double inv_phi = 0.6180339887498949;   // 1/phi
    constexpr double inv_phi2 = 0.3819660112501051;  // 1/phi^2
    double a = lo, b = hi;
    double x1 = a + inv_phi2 * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = h(x1);
    double f2 = h(x2);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = h(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + inv_phi2 * (b - a);
            f1 = h(x1);
        }
        if (x1 >= x2) break;  // machine resolution
    }
    if ((b - a) > std::max(x_tol, 1e-9 * (hi - lo))) {
        throw NoConvergence("golden-section used all iterations; best bracket [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return f1 < f2 ? x2 : x1;
}

}  // namespace breakline
