#pragma once

#include <string>
#include <vector>

#include "breakline/breakpoints.hpp"
#include "breakline/scalar_function.hpp"

namespace breakline {

/// The two approximation-error criteria.
enum class Criterion { MinMaxAbs, MinArea };

const char* to_string(Criterion c);
Criterion criterion_from_string(const std::string& s);  // "minmax" | "area"

/// The line through (lo, f(lo)) and (hi, f(hi)).
struct Chord {
    Interval interval;
    double slope;
    double intercept;

    double value_at(double x) const { return slope * x + intercept; }
};

/// Per-interval error summary: where the largest deviation sits, how big it
/// is, and the enclosed area between function and chord.
struct IntervalErrorReport {
    Interval interval;
    double argmax_x = 0.0;
    double max_abs_error = 0.0;
    double area_error = 0.0;
};

/// Reports for every consecutive breakpoint pair plus the two aggregates.
struct SetErrorReport {
    std::vector<IntervalErrorReport> intervals;
    double e_max = 0.0;      // max over intervals of max_abs_error
    double total_area = 0.0; // sum over intervals of area_error
};

/// Chord over iv. Throws DomainViolation when iv leaves f's domain or is
/// narrower than 1e-12.
Chord chord_of(const ScalarFunction& f, const Interval& iv);

/// Location and size of the largest |f - chord| deviation over iv. Requires a
/// concave or convex curvature tag; the deviation of the tagged sign is
/// maximized with a derivative bisection when f has a derivative, golden
/// section otherwise. area_error is left 0 here.
///
/// Throws CurvatureUnknown for untagged functions and NonConcaveDetected when
/// a sampled deviation dips below -1e-9 (the tag lied).
IntervalErrorReport max_abs_error(const ScalarFunction& f, const Interval& iv);

/// Area enclosed between f and its chord over iv. Uses the antiderivative
/// when available (exact up to rounding), adaptive Simpson otherwise. For
/// untagged functions the integrand |f - chord| is integrated directly.
double area_error(const ScalarFunction& f, const Interval& iv);

/// The two area routes, kept public so they stay independently testable.
double area_error_antiderivative(const ScalarFunction& f, const Interval& iv);
double area_error_quadrature(const ScalarFunction& f, const Interval& iv);

/// One report per consecutive breakpoint pair, with both error fields
/// populated, plus the aggregates.
SetErrorReport evaluate_set(const ScalarFunction& f, const BreakpointSet& bps);

/// Error of a single interval under the given criterion.
double criterion_error(const ScalarFunction& f, const Interval& iv, Criterion c);

/// Aggregate error of a whole set under the given criterion (max for
/// MinMaxAbs, sum for MinArea).
double criterion_error(const ScalarFunction& f, const BreakpointSet& bps, Criterion c);

}  // namespace breakline
