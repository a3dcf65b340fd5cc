#include "breakline/solvers.hpp"

#include <cmath>

#include "breakline/scalar_search.hpp"

namespace breakline {

namespace {

void validate_bracket(const ScalarFunction& f, double a, double b) {
    if (!(a < b)) {
        throw DomainViolation("solver bracket requires a < b, got a=" + std::to_string(a) +
                              " b=" + std::to_string(b));
    }
    if (!f.contains(Interval{a, b})) {
        throw DomainViolation("bracket [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] leaves the domain of '" + f.name() + "'");
    }
    if (f.curvature() == Curvature::Unknown) {
        throw CurvatureUnknown("'" + f.name() +
                               "' has no curvature tag; use assuming_curvature() to assert one");
    }
}

double interval_max_error(const ScalarFunction& f, double a, double b) {
    return max_abs_error(f, Interval{a, b}).max_abs_error;
}

}  // namespace

double phi(const ScalarFunction& f, double a, double b, const SolverConfig& cfg) {
    validate_bracket(f, a, b);
    if (f.name() == "ln") {
        return std::sqrt(a * b);
    }

    // Left error is increasing in c and right error decreasing, so the
    // difference is a decreasing sign function with a single crossing. The
    // epsilon margin keeps the sub-chords non-degenerate.
    const double eps = 1e-9 * (b - a);
    auto error_diff = [&](double c) {
        return interval_max_error(f, c, b) - interval_max_error(f, a, c);
    };
    return bisect_decreasing(error_diff, a + eps, b - eps, cfg.bisection_tol, cfg.max_inner_iter);
}

double theta(const ScalarFunction& f, double a, double b, const SolverConfig& cfg) {
    validate_bracket(f, a, b);
    if (f.name() == "ln") {
        return (b - a) / (std::log(b) - std::log(a));
    }

    const Chord chord = chord_of(f, Interval{a, b});
    const double sign = is_concave(f.curvature()) ? 1.0 : -1.0;
    auto gap = [&](double x) { return sign * (f(x) - chord.value_at(x)); };

    const double eps = 1e-9 * (b - a);
    if (f.has_derivative()) {
        auto slope_gap = [&](double x) { return sign * (f.derivative(x) - chord.slope); };
        // A strictly concave gap rises at a and falls at b. A flat slope gap
        // at either margin is a plateau: the maximizer is not unique.
        if (!(slope_gap(a + eps) > 0.0) || !(slope_gap(b - eps) < 0.0)) {
            throw NotStrictlyConcave("gap of '" + f.name() + "' on [" + std::to_string(a) + ", " +
                                     std::to_string(b) + "] is flat at a bracket margin");
        }
        const double c =
            bisect_decreasing(slope_gap, a + eps, b - eps, cfg.bisection_tol, cfg.max_inner_iter);
        // The slope gap must still be strictly falling just outside c;
        // a zero on either side means the maximum is a plateau.
        const double probe = std::max(1e-6 * (b - a), 100.0 * cfg.bisection_tol);
        const double left = std::max(a + eps, c - probe);
        const double right = std::min(b - eps, c + probe);
        if (!(slope_gap(left) > 0.0) || !(slope_gap(right) < 0.0)) {
            throw NotStrictlyConcave("gap of '" + f.name() + "' is flat at its maximum near x=" +
                                     std::to_string(c));
        }
        return c;
    }

    const double c = golden_max(gap, a, b, cfg.bisection_tol, cfg.max_inner_iter);
    const double scale = std::max({1.0, std::abs(f(a)), std::abs(f(b))});
    if (gap(c) <= 1e-13 * scale) {
        // Zero gap everywhere: f is affine on [a,b].
        throw NotStrictlyConcave("gap of '" + f.name() + "' on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "] is identically flat");
    }
    // Without a derivative, plateau detection probes the gap itself. The probe
    // is wide enough for the drop of a strict maximum to clear rounding noise.
    const double probe = std::max(1e-4 * (b - a), 100.0 * cfg.bisection_tol);
    const double gc = gap(c);
    if (!(gap(std::max(a, c - probe)) < gc) || !(gap(std::min(b, c + probe)) < gc)) {
        throw NotStrictlyConcave("gap of '" + f.name() + "' is flat at its maximum near x=" +
                                 std::to_string(c));
    }
    return c;
}

}  // namespace breakline
