#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "breakline/catalog.hpp"
#include "breakline/pwl.hpp"
#include "breakline/serialize.hpp"
#include "test_support.hpp"

using namespace breakline;
using namespace breakline::testing;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("export_pwl") {
    const ScalarFunction ln = catalog_get("ln");
    const Interval range{0.1, 10.0};
    const SamResult res = optimize(ln, range, 5, SamConfig{});
    REQUIRE(res.converged);

    SUBCASE("four contiguous pieces interpolating ln") {
        const PwlFunction pwl = export_pwl(res, ln);
        REQUIRE(pwl.pieces.size() == 4);
        CHECK(pwl.pieces[0].slope ==
              doctest::Approx(std::log(std::sqrt(10.0)) / (0.1 * std::sqrt(10.0) - 0.1))
                  .epsilon(1e-4));
        CHECK(pwl.pieces[0].slope == doctest::Approx(5.3245).epsilon(1e-3));
        for (std::size_t i = 0; i + 1 < pwl.pieces.size(); ++i) {
            CHECK(pwl.pieces[i].interval.hi == pwl.pieces[i + 1].interval.lo);
            const double x = pwl.pieces[i].interval.hi;
            const double left = pwl.pieces[i].slope * x + pwl.pieces[i].intercept;
            const double right = pwl.pieces[i + 1].slope * x + pwl.pieces[i + 1].intercept;
            CHECK(std::abs(left - right) <= 1e-10);
        }
        for (const auto& p : pwl.pieces) {
            CHECK(std::abs(p.slope * p.interval.lo + p.intercept - ln(p.interval.lo)) <= 1e-10);
            CHECK(std::abs(p.slope * p.interval.hi + p.intercept - ln(p.interval.hi)) <= 1e-10);
        }
        CHECK(pwl.achieved_e_max == res.report.e_max);
        CHECK(pwl.function_name == "ln");
    }
    SUBCASE("n=2 exports the single global chord") {
        const SamResult two = optimize(ln, range, 2, SamConfig{});
        const PwlFunction pwl = export_pwl(two, ln);
        CHECK(pwl.pieces.size() == 1);
        CHECK(pwl.pieces[0].slope == doctest::Approx(std::log(100.0) / 9.9).epsilon(1e-12));
    }
    SUBCASE("unconverged results need the explicit flag") {
        SamConfig cfg;
        cfg.max_sweeps = 1;
        const SamResult bad = optimize(ln, range, 5, cfg);
        REQUIRE_FALSE(bad.converged);
        CHECK_THROWS_AS(export_pwl(bad, ln), Unconverged);
        CHECK(export_pwl(bad, ln, /*allow_unconverged=*/true).pieces.size() == 4);
    }
}

TEST_CASE("emit_error_profile") {
    const ScalarFunction ln = catalog_get("ln");

    SUBCASE("zero error at the breakpoints, known peak in between") {
        const double r = std::pow(100.0, 0.25);
        const BreakpointSet geo{{0.1, 0.1 * r, 0.1 * r * r, 0.1 * r * r * r, 10.0}};
        const auto profile = emit_error_profile(ln, geo, 201);
        REQUIRE(profile.size() == 4 * 200 + 1);
        double peak = 0.0;
        for (const auto& s : profile) peak = std::max(peak, s.error);
        CHECK(peak == doctest::Approx(0.16272).epsilon(1e-3));
        for (double bp : geo.points()) {
            for (const auto& s : profile) {
                if (s.x == bp) CHECK(std::abs(s.error) <= 1e-12);
            }
        }
    }
    SUBCASE("uniform init profile peaks near 1.162 in the first piece") {
        const BreakpointSet uni{{0.1, 2.575, 5.05, 7.525, 10.0}};
        const auto profile = emit_error_profile(ln, uni, 400);
        double peak = 0.0;
        for (const auto& s : profile) peak = std::max(peak, s.error);
        CHECK(peak == doctest::Approx(1.1620).epsilon(2e-3));
    }
    SUBCASE("profile extrema match the per-interval reports") {
        const BreakpointSet bps{{0.1, 1.0, 10.0}};
        const auto profile = emit_error_profile(ln, bps, 2001);
        const auto set = evaluate_set(ln, bps);
        for (const auto& iv : set.intervals) {
            double peak = 0.0;
            for (const auto& s : profile) {
                if (s.x >= iv.interval.lo && s.x <= iv.interval.hi) {
                    peak = std::max(peak, std::abs(s.error));
                }
            }
            // Sampled view of the same quantity: equal up to grid resolution.
            CHECK(peak == doctest::Approx(iv.max_abs_error).epsilon(1e-4));
        }
    }
    SUBCASE("sample counts below 2 are rejected") {
        CHECK_THROWS_AS(emit_error_profile(ln, BreakpointSet{{1.0, 2.0}}, 1), InvalidArgument);
    }
}

TEST_CASE("serialization") {
    const ScalarFunction ln = catalog_get("ln");
    const SamResult res = optimize(ln, Interval{0.1, 10.0}, 5, SamConfig{});

    SUBCASE("pwl json round-trip is bit-exact") {
        const PwlFunction pwl = export_pwl(res, ln);
        const std::string text = pwl_to_json(pwl).dump();
        const PwlFunction back = pwl_from_json(nlohmann::json::parse(text));
        REQUIRE(back.pieces.size() == pwl.pieces.size());
        for (std::size_t i = 0; i < pwl.pieces.size(); ++i) {
            CHECK(bit_equal(back.pieces[i].interval.lo, pwl.pieces[i].interval.lo));
            CHECK(bit_equal(back.pieces[i].interval.hi, pwl.pieces[i].interval.hi));
            CHECK(bit_equal(back.pieces[i].slope, pwl.pieces[i].slope));
            CHECK(bit_equal(back.pieces[i].intercept, pwl.pieces[i].intercept));
        }
        for (std::size_t i = 0; i < pwl.breakpoints.size(); ++i) {
            CHECK(bit_equal(back.breakpoints[i], pwl.breakpoints[i]));
        }
        CHECK(bit_equal(back.achieved_e_max, pwl.achieved_e_max));
        CHECK(bit_equal(back.achieved_area, pwl.achieved_area));
        CHECK(back.function_name == pwl.function_name);
        CHECK(back.criterion == pwl.criterion);
    }
    SUBCASE("result document carries the advertised keys") {
        const nlohmann::json doc = result_to_json(ln, res);
        for (const char* key : {"function", "criterion", "range", "n", "tolerance", "converged",
                                "sweeps", "breakpoints", "pieces", "e_max", "area_error", "trace"}) {
            CAPTURE(key);
            CHECK(doc.contains(key));
        }
        CHECK(doc["n"] == 5);
        CHECK(doc["converged"] == true);
        CHECK(doc["trace"].size() == res.trace.size());
        CHECK(doc["range"]["lo"] == 0.1);
    }
    SUBCASE("csv headers and shapes") {
        const auto profile = emit_error_profile(ln, res.breakpoints, 3);
        const std::string pcsv = profile_to_csv(profile);
        CHECK(pcsv.rfind("x,error\n", 0) == 0);

        const std::string tcsv = trace_to_csv(res.trace);
        CHECK(tcsv.rfind("sweep,e_max,area_error,max_movement\n", 0) == 0);
        CHECK(std::count(tcsv.begin(), tcsv.end(), '\n') ==
              static_cast<long>(res.trace.size()) + 1);
    }
    SUBCASE("format_double survives the round trip") {
        auto rng = make_rng(53);
        for (int i = 0; i < 1000; ++i) {
            const double v = uniform(rng, -1e6, 1e6) * std::pow(10.0, int(uniform(rng, -12, 12)));
            CHECK(bit_equal(std::stod(format_double(v)), v));
        }
    }
}

TEST_CASE("bench returns one row per requested n") {
    const ScalarFunction ln = catalog_get("ln");
    const auto rows = bench({2, 5, 10}, ln, Interval{0.1, 10.0}, Criterion::MinMaxAbs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].sweeps == 0);
    CHECK(rows[0].converged);
    CHECK(rows[1].final_error == doctest::Approx(0.16272).epsilon(5e-4));
    for (const auto& r : rows) {
        CHECK(r.wall_time_seconds >= 0.0);
        CHECK(r.converged);
    }
    const std::string csv = bench_to_csv(rows);
    CHECK(csv.rfind("n,wall_time_seconds,sweeps,final_error,converged\n", 0) == 0);
}
