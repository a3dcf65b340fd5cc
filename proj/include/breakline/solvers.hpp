#pragma once

#include "breakline/interval_error.hpp"
#include "breakline/scalar_function.hpp"

namespace breakline {

/// Tolerances for the single-interior-point searches.
struct SolverConfig {
    double bisection_tol = 1e-12;  // abscissa tolerance for inner searches
    int max_inner_iter = 200;
};

/// Interior point c in (a,b) equalizing the max absolute errors of the two
/// sub-chords of [a,b]; the optimum under the minmax criterion.
///
/// The left error grows and the right error shrinks as c moves right, so the
/// equalizing c is found by bisection on their difference. For the catalog
/// "ln" the closed form sqrt(a*b) is used instead. Convex functions are
/// handled through the mirror, which leaves c unchanged.
double phi(const ScalarFunction& f, double a, double b, const SolverConfig& cfg = {});

/// Interior point c in (a,b) maximizing the deviation f(c) - L(a,b)(c); the
/// optimum under the area criterion. Unique for strictly concave f.
///
/// With a derivative present, c solves f'(c) = chord slope by bisection;
/// otherwise a golden-section search maximizes the gap. For the catalog "ln"
/// the closed form (b-a)/(ln b - ln a) is used instead.
///
/// Throws NotStrictlyConcave when the gap is flat at its maximum over a width
/// exceeding the tolerance (uniqueness would be lost).
double theta(const ScalarFunction& f, double a, double b, const SolverConfig& cfg = {});

}  // namespace breakline
