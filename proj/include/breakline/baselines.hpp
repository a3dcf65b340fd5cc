#pragma once

#include "breakline/breakpoints.hpp"
#include "breakline/interval_error.hpp"
#include "breakline/solvers.hpp"

namespace breakline {

struct BaselineResult {
    BreakpointSet breakpoints;
    SetErrorReport report;
};

/// Equally spaced breakpoints plus their error evaluation; the no-effort
/// comparator.
BaselineResult uniform_baseline(const ScalarFunction& f, const Interval& range, int n);

/// Greedy refinement: starting from the endpoints, repeatedly split the
/// interval with the largest criterion error at its phi/theta point until the
/// aggregate criterion error falls to `error_threshold`. Generally needs more
/// points than the optimum for the same error.
///
/// Throws Nonconvergence after 10^4 insertions.
BreakpointSet greedy_insert(const ScalarFunction& f, const Interval& range,
                            double error_threshold, Criterion criterion,
                            const SolverConfig& solver = {});

/// Exhaustive search over a uniform candidate grid of interior points;
/// the independent optimality certificate for small n. Supports n=3
/// (grid_points <= 20000) and n=4 (grid_points <= 2000). Ties go to the
/// lexicographically smallest tuple.
BreakpointSet grid_oracle(const ScalarFunction& f, const Interval& range, int n,
                          Criterion criterion, int grid_points);

}  // namespace breakline
