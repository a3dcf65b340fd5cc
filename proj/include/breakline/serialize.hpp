#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "breakline/pwl.hpp"
#include "breakline/sam.hpp"

namespace breakline {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Self-describing result document. Top-level keys: function, criterion,
/// range {lo,hi}, n, tolerance, converged, sweeps, breakpoints, pieces
/// [{lo,hi,slope,intercept}], e_max, area_error, trace
/// [{sweep,e_max,area_error,max_movement}].
nlohmann::json result_to_json(const ScalarFunction& f, const SamResult& result);

nlohmann::json pwl_to_json(const PwlFunction& pwl);
PwlFunction pwl_from_json(const nlohmann::json& j);

/// CSV with header "x,error", one row per sample.
std::string profile_to_csv(const std::vector<ProfileSample>& samples);

/// CSV with header "sweep,e_max,area_error,max_movement".
std::string trace_to_csv(const SamTrace& trace);

/// CSV with header "n,wall_time_seconds,sweeps,final_error,converged".
std::string bench_to_csv(const std::vector<BenchRow>& rows);

nlohmann::json bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace breakline
