#include "breakline/interval_error.hpp"

#include <cmath>

#include "breakline/quadrature.hpp"
#include "breakline/scalar_search.hpp"

namespace breakline {

namespace {

constexpr double kMinWidth = 1e-12;        // degenerate-interval guard
constexpr double kMaximizerTol = 1e-12;    // abscissa width for the interior max search
constexpr int kMaximizerIter = 256;
constexpr double kConcavitySlack = -1e-9;  // sampled deviation below this means the tag lied

void require_inside(const ScalarFunction& f, const Interval& iv) {
    if (!f.contains(iv)) {
        throw DomainViolation("interval [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                              "] leaves the domain of '" + f.name() + "'");
    }
    if (iv.width() < kMinWidth) {
        throw DomainViolation("interval narrower than 1e-12: [" + std::to_string(iv.lo) + ", " +
                              std::to_string(iv.hi) + "]");
    }
}

// +1 when the graph lies above the chord (concave), -1 below (convex).
double gap_sign(const ScalarFunction& f) {
    if (is_concave(f.curvature())) return 1.0;
    if (is_convex(f.curvature())) return -1.0;
    throw CurvatureUnknown("'" + f.name() +
                           "' has no curvature tag; use assuming_curvature() to assert one");
}

}  // namespace

const char* to_string(Criterion c) {
    return c == Criterion::MinMaxAbs ? "minmax" : "area";
}

Criterion criterion_from_string(const std::string& s) {
    if (s == "minmax") return Criterion::MinMaxAbs;
    if (s == "area") return Criterion::MinArea;
    throw InvalidArgument("unknown criterion '" + s + "' (expected minmax or area)");
}

Chord chord_of(const ScalarFunction& f, const Interval& iv) {
    require_inside(f, iv);
    const double f_lo = f(iv.lo);
    const double f_hi = f(iv.hi);
    const double slope = (f_hi - f_lo) / (iv.hi - iv.lo);
    return Chord{iv, slope, f_lo - slope * iv.lo};
}

IntervalErrorReport max_abs_error(const ScalarFunction& f, const Interval& iv) {
    const Chord chord = chord_of(f, iv);
    const double sign = gap_sign(f);

    // Deviation of the tagged sign; nonnegative on [lo,hi] when the tag holds.
    auto gap = [&](double x) {
        const double g = sign * (f(x) - chord.value_at(x));
        if (g < kConcavitySlack) {
            throw NonConcaveDetected("'" + f.name() + "' deviates " + std::to_string(g) +
                                     " against its curvature tag at x=" + std::to_string(x));
        }
        return g;
    };

    double xmax;
    if (f.has_derivative()) {
        // For a concave f the slope gap f'(x) - slope is decreasing through 0
        // at the interior maximizer; only midpoints are evaluated, so infinite
        // endpoint derivatives (sqrt at 0) never bite.
        auto slope_gap = [&](double x) { return sign * (f.derivative(x) - chord.slope); };
        xmax = bisect_decreasing(slope_gap, iv.lo, iv.hi, kMaximizerTol, kMaximizerIter);
    } else {
        xmax = golden_max(gap, iv.lo, iv.hi, kMaximizerTol, kMaximizerIter);
    }

    IntervalErrorReport report{iv};
    report.argmax_x = xmax;
    report.max_abs_error = std::abs(gap(xmax));
    return report;
}

double area_error_antiderivative(const ScalarFunction& f, const Interval& iv) {
    require_inside(f, iv);
    if (!f.has_antiderivative()) {
        throw InvalidArgument("'" + f.name() + "' carries no antiderivative");
    }
    const double integral = f.antiderivative(iv.hi) - f.antiderivative(iv.lo);
    const double trapezoid = 0.5 * (f(iv.lo) + f(iv.hi)) * iv.width();
    return std::abs(integral - trapezoid);
}

double area_error_quadrature(const ScalarFunction& f, const Interval& iv) {
    const Chord chord = chord_of(f, iv);
    if (f.curvature() == Curvature::Unknown) {
        // No sign information: integrate |f - chord| directly.
        auto abs_gap = [&](double x) { return std::abs(f(x) - chord.value_at(x)); };
        return adaptive_simpson(abs_gap, iv.lo, iv.hi, 1e-10, 50);
    }
    auto gap = [&](double x) { return f(x) - chord.value_at(x); };
    return std::abs(adaptive_simpson(gap, iv.lo, iv.hi, 1e-10, 50));
}

double area_error(const ScalarFunction& f, const Interval& iv) {
    if (f.has_antiderivative() && f.curvature() != Curvature::Unknown) {
        return area_error_antiderivative(f, iv);
    }
    return area_error_quadrature(f, iv);
}

SetErrorReport evaluate_set(const ScalarFunction& f, const BreakpointSet& bps) {
    SetErrorReport set;
    set.intervals.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Interval iv{bps[i], bps[i + 1]};
        IntervalErrorReport report = max_abs_error(f, iv);
        report.area_error = area_error(f, iv);
        set.intervals.push_back(report);
    }
    set.e_max = 0.0;
    set.total_area = 0.0;
    for (const auto& r : set.intervals) {
        if (r.max_abs_error > set.e_max) set.e_max = r.max_abs_error;
        set.total_area += r.area_error;
    }
    return set;
}

double criterion_error(const ScalarFunction& f, const Interval& iv, Criterion c) {
    return c == Criterion::MinMaxAbs ? max_abs_error(f, iv).max_abs_error : area_error(f, iv);
}

double criterion_error(const ScalarFunction& f, const BreakpointSet& bps, Criterion c) {
    double total = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const double e = criterion_error(f, Interval{bps[i], bps[i + 1]}, c);
        total += e;
        if (e > worst) worst = e;
    }
    return c == Criterion::MinMaxAbs ? worst : total;
}

}  // namespace breakline
