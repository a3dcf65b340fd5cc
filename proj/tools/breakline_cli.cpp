// breakline: optimal breakpoint placement for piecewise linear approximation
// of convex/concave scalar functions, with JSON/CSV export.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "breakline/baselines.hpp"
#include "breakline/catalog.hpp"
#include "breakline/log.hpp"
#include "breakline/pwl.hpp"
#include "breakline/serialize.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string function = "ln";
    double lo = 0.1;
    double hi = 10.0;
    int n = 5;
    std::string criterion = "minmax";
    double tolerance = 1e-8;
    std::string init = "uniform";
    std::uint64_t seed = 0;
    int max_sweeps = 10000;
    std::string format = "json";
    std::string out;  // empty = stdout
};

void add_common_options(CLI::App& cmd, CommonOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd.add_option("--function", o.function, "catalog function name")->capture_default_str();
    cmd.add_option("--lo", o.lo, "range lower endpoint")->capture_default_str();
    cmd.add_option("--hi", o.hi, "range upper endpoint")->capture_default_str();
    cmd.add_option("--n", o.n, "number of breakpoints (>= 2)")->capture_default_str();
    cmd.add_option("--criterion", o.criterion, "minmax | area")->capture_default_str();
    cmd.add_option("--tolerance", o.tolerance, "convergence tolerance on point movement")
        ->capture_default_str();
    cmd.add_option("--init", o.init, "uniform | random")->capture_default_str();
    cmd.add_option("--seed", o.seed, "seed for random init")->capture_default_str();
    cmd.add_option("--max-sweeps", o.max_sweeps, "sweep cap")->capture_default_str();
    cmd.add_option("--format", o.format, "json | csv")->capture_default_str();
    cmd.add_option("--out", o.out, "output path (default: stdout)");
}

breakline::SamConfig make_config(const CommonOpts& o) {
    breakline::SamConfig cfg;
    cfg.criterion = breakline::criterion_from_string(o.criterion);
    cfg.tolerance = o.tolerance;
    cfg.max_sweeps = o.max_sweeps;
    if (o.init == "uniform") {
        cfg.init = breakline::InitSpec::uniform();
    } else if (o.init == "random") {
        cfg.init = breakline::InitSpec::random(o.seed);
    } else {
        throw breakline::InvalidArgument("unknown init '" + o.init + "' (expected uniform or random)");
    }
    return cfg;
}

void check_format(const CommonOpts& o) {
    if (o.format != "json" && o.format != "csv") {
        throw breakline::InvalidArgument("unknown format '" + o.format + "' (expected json or csv)");
    }
}

void write_output(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw breakline::InvalidArgument("cannot open output path '" + o.out + "'");
    }
    file << text;
}

int run_optimize(const CommonOpts& o) {
    check_format(o);
    const breakline::ScalarFunction f = breakline::catalog_get(o.function);
    const breakline::Interval range{o.lo, o.hi};
    const breakline::SamResult result = breakline::optimize(f, range, o.n, make_config(o));
    if (o.format == "json") {
        write_output(o, breakline::result_to_json(f, result).dump(2) + "\n");
    } else {
        write_output(o, breakline::trace_to_csv(result.trace));
    }
    return result.converged ? 0 : 2;
}

int run_profile(const CommonOpts& o, int samples, int sweep_index) {
    check_format(o);
    const breakline::ScalarFunction f = breakline::catalog_get(o.function);
    const breakline::Interval range{o.lo, o.hi};
    const breakline::SamResult result = breakline::optimize(f, range, o.n, make_config(o));

    const breakline::BreakpointSet bps = [&] {
        if (sweep_index < 0) return result.breakpoints;
        if (sweep_index >= static_cast<int>(result.trace.size())) {
            throw breakline::InvalidArgument("--sweep " + std::to_string(sweep_index) +
                                             " is beyond the recorded trace");
        }
        return breakline::BreakpointSet(result.trace[static_cast<std::size_t>(sweep_index)].breakpoints);
    }();
    const auto profile = breakline::emit_error_profile(f, bps, samples);

    if (o.format == "csv") {
        write_output(o, breakline::profile_to_csv(profile));
    } else {
        json arr = json::array();
        for (const auto& s : profile) arr.push_back({{"x", s.x}, {"error", s.error}});
        write_output(o, arr.dump(2) + "\n");
    }
    return result.converged ? 0 : 2;
}

int run_compare(const CommonOpts& o) {
    check_format(o);
    const breakline::ScalarFunction f = breakline::catalog_get(o.function);
    const breakline::Interval range{o.lo, o.hi};

    breakline::SamConfig cfg = make_config(o);
    cfg.criterion = breakline::Criterion::MinMaxAbs;
    const breakline::SamResult minmax = breakline::optimize(f, range, o.n, cfg);
    cfg.criterion = breakline::Criterion::MinArea;
    const breakline::SamResult area = breakline::optimize(f, range, o.n, cfg);
    const breakline::BaselineResult uniform = breakline::uniform_baseline(f, range, o.n);

    // Greedy gets the SAM-achieved errors as thresholds: how many points does
    // it need to match the optimum?
    const breakline::BreakpointSet greedy_minmax = breakline::greedy_insert(
        f, range, minmax.report.e_max, breakline::Criterion::MinMaxAbs, cfg.solver);
    const breakline::BreakpointSet greedy_area = breakline::greedy_insert(
        f, range, area.report.total_area, breakline::Criterion::MinArea, cfg.solver);

    struct Row {
        std::string name;
        const breakline::BreakpointSet* bps;
        double e_max;
        double area_error;
    };
    const breakline::SetErrorReport greedy_minmax_report = breakline::evaluate_set(f, greedy_minmax);
    const breakline::SetErrorReport greedy_area_report = breakline::evaluate_set(f, greedy_area);
    const std::vector<Row> rows = {
        {"uniform", &uniform.breakpoints, uniform.report.e_max, uniform.report.total_area},
        {"sam_minmax", &minmax.breakpoints, minmax.report.e_max, minmax.report.total_area},
        {"sam_area", &area.breakpoints, area.report.e_max, area.report.total_area},
        {"greedy_minmax", &greedy_minmax, greedy_minmax_report.e_max, greedy_minmax_report.total_area},
        {"greedy_area", &greedy_area, greedy_area_report.e_max, greedy_area_report.total_area},
    };

    if (o.format == "json") {
        json strategies = json::array();
        for (const auto& r : rows) {
            strategies.push_back({{"name", r.name},
                                  {"n", r.bps->size()},
                                  {"breakpoints", r.bps->points()},
                                  {"e_max", r.e_max},
                                  {"area_error", r.area_error}});
        }
        const json doc{{"function", f.name()},
                       {"range", {{"lo", range.lo}, {"hi", range.hi}}},
                       {"n", o.n},
                       {"tolerance", o.tolerance},
                       {"strategies", std::move(strategies)}};
        write_output(o, doc.dump(2) + "\n");
    } else {
        std::string out = "strategy,n,e_max,area_error\n";
        for (const auto& r : rows) {
            out += r.name + ',' + std::to_string(r.bps->size()) + ',' +
                   breakline::format_double(r.e_max) + ',' + breakline::format_double(r.area_error) +
                   '\n';
        }
        write_output(o, out);
    }
    return minmax.converged && area.converged ? 0 : 2;
}

int run_bench(const CommonOpts& o, const std::vector<int>& n_values) {
    check_format(o);
    const breakline::ScalarFunction f = breakline::catalog_get(o.function);
    const breakline::Interval range{o.lo, o.hi};
    breakline::SamConfig cfg = make_config(o);
    const auto rows =
        breakline::bench(n_values, f, range, breakline::criterion_from_string(o.criterion), cfg);
    if (o.format == "json") {
        write_output(o, breakline::bench_to_json(rows).dump(2) + "\n");
    } else {
        write_output(o, breakline::bench_to_csv(rows));
    }
    for (const auto& r : rows) {
        if (!r.converged) return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal breakpoint selection for piecewise linear approximation"};
    app.require_subcommand(1);

    CommonOpts opt_o, opt_p, opt_c, opt_b;
    int samples = 128;
    int sweep_index = -1;
    std::vector<int> n_values = {5, 10, 20, 50, 100};

    CLI::App* cmd_optimize =
        app.add_subcommand("optimize", "run SAM and emit the result document (csv: trace)");
    add_common_options(*cmd_optimize, opt_o, "json");

    CLI::App* cmd_profile =
        app.add_subcommand("profile", "signed error profile f(x) - L(x) of the optimized set");
    add_common_options(*cmd_profile, opt_p, "csv");
    cmd_profile->add_option("--samples", samples, "samples per piece (>= 2)")
        ->capture_default_str();
    cmd_profile->add_option("--sweep", sweep_index,
                            "profile the set after this sweep (0 = initial, -1 = final)")
        ->capture_default_str();

    CLI::App* cmd_compare =
        app.add_subcommand("compare", "SAM vs uniform and greedy-insertion baselines");
    add_common_options(*cmd_compare, opt_c, "json");

    CLI::App* cmd_bench = app.add_subcommand("bench", "wall-clock timing across breakpoint counts");
    add_common_options(*cmd_bench, opt_b, "csv");
    cmd_bench->add_option("--n-list", n_values, "breakpoint counts to time")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // input errors exit 1; --help exits 0
    }

    try {
        if (cmd_optimize->parsed()) return run_optimize(opt_o);
        if (cmd_profile->parsed()) return run_profile(opt_p, samples, sweep_index);
        if (cmd_compare->parsed()) return run_compare(opt_c);
        if (cmd_bench->parsed()) return run_bench(opt_b, n_values);
    } catch (const breakline::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
