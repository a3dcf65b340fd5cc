#include "breakline/serialize.hpp"

#include <charconv>

namespace breakline {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json pwl_to_json(const PwlFunction& pwl) {
    json pieces = json::array();
    for (const auto& p : pwl.pieces) {
        pieces.push_back(
            {{"lo", p.interval.lo}, {"hi", p.interval.hi}, {"slope", p.slope}, {"intercept", p.intercept}});
    }
    return json{{"function", pwl.function_name},
                {"criterion", to_string(pwl.criterion)},
                {"breakpoints", pwl.breakpoints.points()},
                {"pieces", std::move(pieces)},
                {"e_max", pwl.achieved_e_max},
                {"area_error", pwl.achieved_area}};
}

PwlFunction pwl_from_json(const json& j) {
    std::vector<PwlPiece> pieces;
    for (const auto& p : j.at("pieces")) {
        pieces.push_back(PwlPiece{Interval{p.at("lo").get<double>(), p.at("hi").get<double>()},
                                  p.at("slope").get<double>(), p.at("intercept").get<double>()});
    }
    return PwlFunction{std::move(pieces),
                       BreakpointSet(j.at("breakpoints").get<std::vector<double>>()),
                       j.at("function").get<std::string>(),
                       criterion_from_string(j.at("criterion").get<std::string>()),
                       j.at("e_max").get<double>(),
                       j.at("area_error").get<double>()};
}

json result_to_json(const ScalarFunction& f, const SamResult& result) {
    const PwlFunction pwl = export_pwl(result, f, /*allow_unconverged=*/true);
    json trace = json::array();
    for (const auto& rec : result.trace) {
        trace.push_back({{"sweep", rec.sweep},
                         {"e_max", rec.e_max},
                         {"area_error", rec.area_error},
                         {"max_movement", rec.max_movement}});
    }
    json doc = pwl_to_json(pwl);
    doc["range"] = {{"lo", result.range.lo}, {"hi", result.range.hi}};
    doc["n"] = static_cast<int>(result.breakpoints.size());
    doc["tolerance"] = result.config.tolerance;
    doc["converged"] = result.converged;
    doc["sweeps"] = result.sweeps;
    doc["trace"] = std::move(trace);
    return doc;
}

std::string profile_to_csv(const std::vector<ProfileSample>& samples) {
    std::string out = "x,error\n";
    for (const auto& s : samples) {
        out += format_double(s.x);
        out += ',';
        out += format_double(s.error);
        out += '\n';
    }
    return out;
}

std::string trace_to_csv(const SamTrace& trace) {
    std::string out = "sweep,e_max,area_error,max_movement\n";
    for (const auto& rec : trace) {
        out += std::to_string(rec.sweep);
        out += ',';
        out += format_double(rec.e_max);
        out += ',';
        out += format_double(rec.area_error);
        out += ',';
        out += format_double(rec.max_movement);
        out += '\n';
    }
    return out;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "n,wall_time_seconds,sweeps,final_error,converged\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += format_double(r.wall_time_seconds);
        out += ',';
        out += std::to_string(r.sweeps);
        out += ',';
        out += format_double(r.final_error);
        out += ',';
        out += r.converged ? "true" : "false";
        out += '\n';
    }
    return out;
}

json bench_to_json(const std::vector<BenchRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"wall_time_seconds", r.wall_time_seconds},
                       {"sweeps", r.sweeps},
                       {"final_error", r.final_error},
                       {"converged", r.converged}});
    }
    return arr;
}

}  // namespace breakline
