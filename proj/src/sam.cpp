#include "breakline/sam.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "breakline/log.hpp"

namespace breakline {

namespace {

std::vector<double> uniform_points(const Interval& range, int n) {
    std::vector<double> pts(static_cast<std::size_t>(n));
    const double step = range.width() / (n - 1);
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = range.lo + i * step;
    pts.front() = range.lo;
    pts.back() = range.hi;
    return pts;
}

std::vector<double> random_points(const Interval& range, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // 53-bit mantissa mapping keeps the draw identical across platforms.
    auto draw = [&] { return range.lo + range.width() * ((rng() >> 11) * 0x1.0p-53); };
    const double min_gap = 1e-9 * range.width();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> pts(static_cast<std::size_t>(n));
        pts.front() = range.lo;
        pts.back() = range.hi;
        for (int i = 1; i + 1 < n; ++i) pts[static_cast<std::size_t>(i)] = draw();
        std::sort(pts.begin() + 1, pts.end() - 1);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i + 1] - pts[i] < min_gap) {
                ok = false;
                break;
            }
        }
        if (ok) return pts;
    }
    throw NoConvergence("could not draw " + std::to_string(n - 2) +
                        " separated interior points in 1000 attempts");
}

}  // namespace

BreakpointSet init_breakpoints(const Interval& range, int n, const InitSpec& init) {
    if (n < 2) {
        throw InvalidCount("breakpoint count must be >= 2, got " + std::to_string(n));
    }
    switch (init.kind) {
        case InitSpec::Kind::Uniform:
            return BreakpointSet(uniform_points(range, n));
        case InitSpec::Kind::Random:
            return BreakpointSet(random_points(range, n, init.seed));
        case InitSpec::Kind::Explicit: {
            if (static_cast<int>(init.points.size()) != n) {
                throw InvalidExplicit("explicit init carries " + std::to_string(init.points.size()) +
                                      " points but n=" + std::to_string(n));
            }
            if (init.points.front() != range.lo || init.points.back() != range.hi) {
                throw InvalidExplicit("explicit init endpoints must equal the range endpoints");
            }
            for (std::size_t i = 0; i + 1 < init.points.size(); ++i) {
                if (!(init.points[i] < init.points[i + 1])) {
                    throw InvalidExplicit("explicit init must be strictly increasing");
                }
            }
            return BreakpointSet(init.points);
        }
    }
    throw InvalidArgument("unreachable init kind");
}

std::pair<BreakpointSet, double> sweep(const ScalarFunction& f, const BreakpointSet& bps,
                                       const SamConfig& cfg) {
    BreakpointSet work = bps;
    double movement = 0.0;
    for (std::size_t i = 1; i + 1 < work.size(); ++i) {
        const double left = work[i - 1];  // already updated this sweep
        const double right = work[i + 1];
        const std::string ctx = "sweep update of x_" + std::to_string(i) + ": ";
        double c = 0.0;
        try {
            c = cfg.criterion == Criterion::MinMaxAbs ? phi(f, left, right, cfg.solver)
                                                      : theta(f, left, right, cfg.solver);
        } catch (const DomainViolation& e) {
            throw DomainViolation(ctx + e.what());
        } catch (const NoConvergence& e) {
            throw NoConvergence(ctx + e.what());
        } catch (const NotStrictlyConcave& e) {
            throw NotStrictlyConcave(ctx + e.what());
        } catch (const NonConcaveDetected& e) {
            throw NonConcaveDetected(ctx + e.what());
        } catch (const CurvatureUnknown& e) {
            throw CurvatureUnknown(ctx + e.what());
        }
        // Round-off guard: the update must stay clear of both neighbors.
        if (!(left + cfg.solver.bisection_tol < c && c < right - cfg.solver.bisection_tol)) {
            throw NumericalCollapse(ctx + "solver returned " + std::to_string(c) +
                                    " within tolerance of a neighbor");
        }
        movement = std::max(movement, std::abs(c - bps[i]));
        work.set_interior(i, c);
    }
    return {std::move(work), movement};
}

SamResult optimize(const ScalarFunction& f, const Interval& range, int n, const SamConfig& cfg) {
    if (cfg.tolerance <= 0.0) {
        throw InvalidArgument("tolerance must be positive");
    }
    if (cfg.max_sweeps < 1) {
        throw InvalidArgument("max_sweeps must be positive");
    }
    if (!f.contains(range)) {
        throw DomainViolation("range [" + std::to_string(range.lo) + ", " +
                              std::to_string(range.hi) + "] leaves the domain of '" + f.name() +
                              "'");
    }
    if (f.curvature() == Curvature::Unknown) {
        throw CurvatureUnknown("'" + f.name() +
                               "' has no curvature tag; use assuming_curvature() to assert one");
    }

    BreakpointSet bps = init_breakpoints(range, n, cfg.init);
    SamTrace trace;
    auto record = [&](int sweep_idx, double movement) {
        const SetErrorReport r = evaluate_set(f, bps);
        trace.push_back(SweepRecord{sweep_idx, bps.points(), r.e_max, r.total_area, movement});
    };
    record(0, 0.0);

    bool converged = n == 2;  // endpoints only: nothing to adjust
    int sweeps_used = 0;
    for (int s = 1; !converged && s <= cfg.max_sweeps; ++s) {
        auto [next, movement] = sweep(f, bps, cfg);
        bps = std::move(next);
        sweeps_used = s;
        record(s, movement);
        if (log::enabled(log::Level::Debug)) {
            std::ostringstream os;
            os << "sweep " << s << " movement " << movement << " e_max " << trace.back().e_max
               << " area " << trace.back().area_error;
            log::debug(os.str());
        }
        converged = movement <= cfg.tolerance;
    }

    SetErrorReport final_report = evaluate_set(f, bps);
    if (log::enabled(log::Level::Info)) {
        std::ostringstream os;
        os << "optimize " << f.name() << " n=" << n << " " << to_string(cfg.criterion)
           << (converged ? " converged" : " hit max_sweeps") << " after " << sweeps_used
           << " sweeps, e_max " << final_report.e_max << " area " << final_report.total_area;
        log::info(os.str());
    }
    return SamResult{std::move(bps), std::move(trace),  converged, sweeps_used,
                     std::move(final_report), cfg, range};
}

}  // namespace breakline
