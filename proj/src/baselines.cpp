#include "breakline/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "breakline/sam.hpp"

namespace breakline {

BaselineResult uniform_baseline(const ScalarFunction& f, const Interval& range, int n) {
    BreakpointSet bps = init_breakpoints(range, n, InitSpec::uniform());
    SetErrorReport report = evaluate_set(f, bps);
    return BaselineResult{std::move(bps), std::move(report)};
}

BreakpointSet greedy_insert(const ScalarFunction& f, const Interval& range,
                            double error_threshold, Criterion criterion,
                            const SolverConfig& solver) {
    if (!(error_threshold > 0.0)) {
        throw InvalidArgument("greedy_insert needs a positive error threshold");
    }
    constexpr int kMaxInsertions = 10000;

    std::vector<double> pts{range.lo, range.hi};
    std::vector<double> errors{criterion_error(f, range, criterion)};

    for (int inserted = 0;; ++inserted) {
        double aggregate = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < errors.size(); ++i) {
            if (errors[i] > errors[worst]) worst = i;
            aggregate += errors[i];
        }
        if (criterion == Criterion::MinMaxAbs) aggregate = errors[worst];
        if (aggregate <= error_threshold) break;
        if (inserted >= kMaxInsertions) {
            throw Nonconvergence("greedy_insert exceeded 10^4 insertions without reaching " +
                                 std::to_string(error_threshold));
        }

        const double a = pts[worst];
        const double b = pts[worst + 1];
        const double c = criterion == Criterion::MinMaxAbs ? phi(f, a, b, solver)
                                                           : theta(f, a, b, solver);
        pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(worst) + 1, c);
        errors[worst] = criterion_error(f, Interval{a, c}, criterion);
        errors.insert(errors.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                      criterion_error(f, Interval{c, b}, criterion));
    }
    return BreakpointSet(std::move(pts));
}

BreakpointSet grid_oracle(const ScalarFunction& f, const Interval& range, int n,
                          Criterion criterion, int grid_points) {
    if (n != 3 && n != 4) {
        throw InvalidCount("grid_oracle supports n in {3, 4}, got " + std::to_string(n));
    }
    const int budget = n == 3 ? 20000 : 2000;
    if (grid_points < 1 || grid_points > budget) {
        throw BudgetExceeded("grid_points for n=" + std::to_string(n) + " must be in [1, " +
                             std::to_string(budget) + "], got " + std::to_string(grid_points));
    }

    std::vector<double> grid(static_cast<std::size_t>(grid_points));
    const double step = range.width() / (grid_points + 1);
    for (int k = 0; k < grid_points; ++k) {
        grid[static_cast<std::size_t>(k)] = range.lo + (k + 1) * step;
    }

    auto combine = [criterion](double acc, double e) {
        return criterion == Criterion::MinMaxAbs ? std::max(acc, e) : acc + e;
    };

    // Errors of the boundary-touching intervals, shared across combinations.
    std::vector<double> left(grid.size()), right(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        left[i] = criterion_error(f, Interval{range.lo, grid[i]}, criterion);
        right[i] = criterion_error(f, Interval{grid[i], range.hi}, criterion);
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_pts;
    if (n == 3) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double value = combine(left[i], right[i]);
            if (value < best) {
                best = value;
                best_pts = {range.lo, grid[i], range.hi};
            }
        }
    } else {
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            for (std::size_t j = i + 1; j < grid.size(); ++j) {
                const double mid = criterion_error(f, Interval{grid[i], grid[j]}, criterion);
                const double value = combine(combine(left[i], mid), right[j]);
                if (value < best) {
                    best = value;
                    best_pts = {range.lo, grid[i], grid[j], range.hi};
                }
            }
        }
    }
    return BreakpointSet(std::move(best_pts));
}

}  // namespace breakline
