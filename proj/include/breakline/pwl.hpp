#pragma once

#include <string>
#include <vector>

#include "breakline/sam.hpp"

namespace breakline {

struct PwlPiece {
    Interval interval;
    double slope;
    double intercept;
};

/// The exported artifact: contiguous linear pieces interpolating f at the
/// optimized breakpoints, plus the achieved error metrics.
struct PwlFunction {
    std::vector<PwlPiece> pieces;
    BreakpointSet breakpoints;
    std::string function_name;
    Criterion criterion;
    double achieved_e_max;
    double achieved_area;
};

/// Builds the piecewise linear export from an optimization result. Refuses
/// unconverged results unless allow_unconverged is set.
PwlFunction export_pwl(const SamResult& result, const ScalarFunction& f,
                       bool allow_unconverged = false);

struct ProfileSample {
    double x;
    double error;  // signed: f(x) - L(x)
};

/// Dense signed-error samples over every piece, breakpoints included once.
/// sample_count is per piece and must be >= 2.
std::vector<ProfileSample> emit_error_profile(const ScalarFunction& f, const BreakpointSet& bps,
                                              int sample_count);

struct BenchRow {
    int n;
    double wall_time_seconds;
    int sweeps;
    double final_error;  // under the benchmarked criterion
    bool converged;
};

/// Wall-clock timing of optimize for each N, run sequentially.
std::vector<BenchRow> bench(const std::vector<int>& n_values, const ScalarFunction& f,
                            const Interval& range, Criterion criterion, SamConfig base = {});

}  // namespace breakline
