#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "breakline/breakpoints.hpp"
#include "breakline/interval_error.hpp"
#include "breakline/solvers.hpp"

namespace breakline {

/// How the initial breakpoint set is produced.
struct InitSpec {
    enum class Kind { Uniform, Random, Explicit };

    Kind kind = Kind::Uniform;
    std::uint64_t seed = 0;
    std::vector<double> points;  // Explicit only

    static InitSpec uniform() { return {}; }
    static InitSpec random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
    static InitSpec explicit_points(std::vector<double> pts) {
        return {Kind::Explicit, 0, std::move(pts)};
    }
};

struct SamConfig {
    Criterion criterion = Criterion::MinMaxAbs;
    double tolerance = 1e-8;  // convergence threshold on per-point movement
    int max_sweeps = 10000;
    InitSpec init;
    SolverConfig solver;
};

/// State after one sweep. Record 0 is the initial set with movement 0.
struct SweepRecord {
    int sweep;
    std::vector<double> breakpoints;
    double e_max;
    double area_error;
    double max_movement;
};

using SamTrace = std::vector<SweepRecord>;

struct SamResult {
    BreakpointSet breakpoints;
    SamTrace trace;
    bool converged = false;
    int sweeps = 0;  // sweeps executed (trace has sweeps + 1 records)
    SetErrorReport report;
    SamConfig config;
    Interval range;
};

/// Initial set of n breakpoints over the range. Uniform spacing, seeded
/// random interior points (endpoints fixed, deterministic per seed), or a
/// validated explicit pass-through.
BreakpointSet init_breakpoints(const Interval& range, int n, const InitSpec& init);

/// One sequential-adjusting pass: each interior point is replaced by
/// phi (MinMaxAbs) or theta (MinArea) of its neighbors, in ascending order,
/// using the already-updated left neighbor. Returns the new set and the
/// largest per-point movement relative to the input set.
std::pair<BreakpointSet, double> sweep(const ScalarFunction& f, const BreakpointSet& bps,
                                       const SamConfig& cfg);

/// Full sequential adjusting method: init, sweep until the largest per-point
/// movement drops to cfg.tolerance, record a per-sweep trace. When max_sweeps
/// runs out first, the best-so-far result is returned with converged=false.
/// Convex functions yield the same breakpoints as their concave mirror.
SamResult optimize(const ScalarFunction& f, const Interval& range, int n, const SamConfig& cfg);

}  // namespace breakline
