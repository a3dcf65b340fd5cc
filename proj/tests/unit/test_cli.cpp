#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

// Spawns the installed CLI binary and captures stdout plus the exit code.
// Diagnostics (BREAKLINE_LOG) go to stderr and must never leak into stdout.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BREAKLINE_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli optimize emits a stable json document and exit 0") {
    const std::string args = "optimize --function ln --lo 0.1 --hi 10 --n 5";
    const RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("\"converged\": true") != std::string::npos);
    CHECK(first.output.find("\"breakpoints\"") != std::string::npos);

    const RunResult second = run_cli(args);
    CHECK(second.output == first.output);
}

TEST_CASE("cli optimize with random init is byte-stable per seed") {
    const std::string args =
        "optimize --function ln --n 6 --init random --seed 42 --criterion area";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(second.output == first.output);

    const RunResult other = run_cli(
        "optimize --function ln --n 6 --init random --seed 43 --criterion area");
    CHECK(other.output != first.output);  // different trace, same optimum
}

TEST_CASE("cli profile csv is byte-stable") {
    const std::string args = "profile --function ln --n 5 --samples 50";
    const RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output.rfind("x,error\n", 0) == 0);
    const RunResult second = run_cli(args);
    CHECK(second.output == first.output);
}

TEST_CASE("cli exit codes") {
    SUBCASE("unknown function is an input error") {
        CHECK(run_cli("optimize --function bogus 2>/dev/null").exit_code == 1);
    }
    SUBCASE("bad range is an input error") {
        CHECK(run_cli("optimize --function ln --lo -5 --hi 1 2>/dev/null").exit_code == 1);
    }
    SUBCASE("bad flag value is an input error") {
        CHECK(run_cli("optimize --criterion fancy 2>/dev/null").exit_code == 1);
        CHECK(run_cli("optimize --n notanumber 2>/dev/null").exit_code == 1);
    }
    SUBCASE("sweep cap exhaustion exits 2 but still emits the document") {
        const RunResult r = run_cli("optimize --function ln --n 5 --max-sweeps 1");
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("\"converged\": false") != std::string::npos);
    }
    SUBCASE("help exits 0") {
        CHECK(run_cli("--help").exit_code == 0);
    }
}

TEST_CASE("cli compare lists all strategies") {
    const RunResult r = run_cli("compare --function ln --n 5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("strategy,n,e_max,area_error\n", 0) == 0);
    for (const char* name : {"uniform", "sam_minmax", "sam_area", "greedy_minmax", "greedy_area"}) {
        CAPTURE(name);
        CHECK(r.output.find(name) != std::string::npos);
    }
}

TEST_CASE("cli bench emits one csv row per n") {
    const RunResult r = run_cli("bench --function ln --n-list 2,5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("n,wall_time_seconds,sweeps,final_error,converged\n", 0) == 0);
    CHECK(r.output.find("\n2,") != std::string::npos);
    CHECK(r.output.find("\n5,") != std::string::npos);
}
