#include "breakline/pwl.hpp"

#include <chrono>

#include "breakline/interval_error.hpp"

namespace breakline {

PwlFunction export_pwl(const SamResult& result, const ScalarFunction& f, bool allow_unconverged) {
    if (!result.converged && !allow_unconverged) {
        throw Unconverged("refusing to export an unconverged result for '" + f.name() +
                          "'; pass allow_unconverged to override");
    }
    const BreakpointSet& bps = result.breakpoints;
    std::vector<PwlPiece> pieces;
    pieces.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Chord chord = chord_of(f, Interval{bps[i], bps[i + 1]});
        pieces.push_back(PwlPiece{chord.interval, chord.slope, chord.intercept});
    }
    return PwlFunction{std::move(pieces), bps, f.name(), result.config.criterion,
                       result.report.e_max, result.report.total_area};
}

std::vector<ProfileSample> emit_error_profile(const ScalarFunction& f, const BreakpointSet& bps,
                                              int sample_count) {
    if (sample_count < 2) {
        throw InvalidArgument("profile needs at least 2 samples per piece, got " +
                              std::to_string(sample_count));
    }
    std::vector<ProfileSample> samples;
    samples.reserve((bps.size() - 1) * static_cast<std::size_t>(sample_count));
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Interval iv{bps[i], bps[i + 1]};
        const Chord chord = chord_of(f, iv);
        // First piece carries its left endpoint; later pieces skip it to
        // avoid duplicating the shared breakpoint row.
        const int first = i == 0 ? 0 : 1;
        for (int k = first; k < sample_count; ++k) {
            const double x = k == sample_count - 1
                                 ? iv.hi
                                 : iv.lo + iv.width() * k / (sample_count - 1);
            samples.push_back(ProfileSample{x, f(x) - chord.value_at(x)});
        }
    }
    return samples;
}

std::vector<BenchRow> bench(const std::vector<int>& n_values, const ScalarFunction& f,
                            const Interval& range, Criterion criterion, SamConfig base) {
    base.criterion = criterion;
    std::vector<BenchRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        const auto start = std::chrono::steady_clock::now();
        const SamResult result = optimize(f, range, n, base);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        const double error =
            criterion == Criterion::MinMaxAbs ? result.report.e_max : result.report.total_area;
        rows.push_back(BenchRow{n, elapsed.count(), result.sweeps, error, result.converged});
    }
    return rows;
}

}  // namespace breakline
