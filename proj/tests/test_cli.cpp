#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(LHTL_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe))
        r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double parse_key(const std::string& output, const std::string& key) {
    const auto pos = output.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::strtod(output.c_str() + pos + key.size() + 1, nullptr);
}

} // namespace

TEST_CASE("compute spot value in natural units") {
    const auto r = run("compute --units natural --temperature 1 --omega 1 --n 0 "
                       "--dj2 1 --z0 1 --zl 1");
    CHECK(r.exit_code == 0);
    CHECK(parse_key(r.output, "n_r") == doctest::Approx(-0.7038914526722292).epsilon(1e-6));
    CHECK(parse_key(r.output, "x") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(parse_key(r.output, "n0") == doctest::Approx(0.58197670686932642).epsilon(1e-6));
    CHECK(parse_key(r.output, "bracket") == doctest::Approx(2.8413471884155846).epsilon(1e-6));
}

TEST_CASE("compute with zero fluctuation") {
    const auto r = run("compute --units natural --temperature 1 --omega 1 --dj2 0 "
                       "--z0 1 --zl 1");
    CHECK(r.exit_code == 0);
    CHECK(parse_key(r.output, "n_r") == 0.0);
}

TEST_CASE("domain errors name the offending flag and exit 2") {
    const auto r = run("compute --temperature -5 --omega 1 --dj2 1 --z0 1 --zl 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("--temperature") != std::string::npos);

    CHECK(run("compute --omega 0 --dj2 1").exit_code == 2);
    CHECK(run("compute --z0 -1").exit_code == 2);
}

TEST_CASE("chain method serves T = 0") {
    const auto r = run("compute --units natural --method chain --temperature 0 "
                       "--omega 1 --n 10 --dj2 1 --z0 1 --zl 1");
    CHECK(r.exit_code == 0);
    CHECK(parse_key(r.output, "n_r") == doctest::Approx(-2.0 / 21.0).epsilon(1e-6));
    CHECK(parse_key(r.output, "bracket") == doctest::Approx(21.0).epsilon(1e-12));
}

TEST_CASE("classical bundle") {
    const auto r = run("classical --cl 1e-12 --ll 2.5e-9 --omega 1e9");
    CHECK(r.exit_code == 0);
    CHECK(parse_key(r.output, "z_char") == doctest::Approx(50.0).epsilon(1e-12));
    const double beta = parse_key(r.output, "beta");
    const double vg = parse_key(r.output, "v_group");
    const double vp = parse_key(r.output, "v_phase");
    CHECK(beta < 0.0);
    CHECK(vp == doctest::Approx(-vg).epsilon(1e-15));
}

TEST_CASE("sweep produces the requested grid") {
    const fs::path dir = fs::temp_directory_path() / "lhtl_cli_sweep";
    fs::remove_all(dir);
    const auto r = run("sweep --units natural --axis temperature --from 1 --to 10 "
                       "--points 2 --omega 1 --dj2 1 --z0 1 --zl 1 --out " + dir.string());
    CHECK(r.exit_code == 0);
    std::ifstream f(dir / "sweep.csv");
    REQUIRE(f.good());
    std::string line;
    int data_rows = 0;
    while (std::getline(f, line))
        if (!line.empty() && line[0] != '#' && line.find("temperature,") != 0)
            ++data_rows;
    CHECK(data_rows == 2);
    fs::remove_all(dir);
}

TEST_CASE("unwritable output path exits 3") {
    const auto r = run("sweep --axis temperature --from 1 --to 10 --points 2 "
                       "--out /proc/lhtl_forbidden");
    CHECK(r.exit_code == 3);
}

TEST_CASE("environment variable selects the default unit system") {
    const std::string cmd =
        "LHTL_UNITS=natural " + std::string(LHTL_CLI_PATH) +
        " compute --temperature 1 --omega 1 --dj2 1 --z0 1 --zl 1 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe))
        output += buf.data();
    pclose(pipe);
    CHECK(parse_key(output, "x") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("json config supplies flags and the command line overrides it") {
    const fs::path dir = fs::temp_directory_path() / "lhtl_cli_cfg";
    fs::create_directories(dir);
    const fs::path cfg = dir / "cfg.json";
    {
        std::ofstream f(cfg);
        f << R"({"units":"natural","temperature":1.0,"omega":1.0,"dj2":1.0,)"
          << R"("z0":1.0,"zl":1.0,"n":0})";
    }
    const auto from_config = run("compute --config " + cfg.string());
    CHECK(from_config.exit_code == 0);
    CHECK(parse_key(from_config.output, "x") == doctest::Approx(1.0).epsilon(1e-12));

    const auto overridden = run("compute --config " + cfg.string() + " --temperature 2");
    CHECK(overridden.exit_code == 0);
    CHECK(parse_key(overridden.output, "x") == doctest::Approx(0.5).epsilon(1e-12));

    {
        std::ofstream f(cfg);
        f << R"({"unknown-key":1})";
    }
    CHECK(run("compute --config " + cfg.string()).exit_code == 2);
    CHECK(run("compute --config " + (dir / "missing.json").string()).exit_code == 3);
    fs::remove_all(dir);
}

TEST_CASE("verify exits 0 and always prints the bracket comparison") {
    const fs::path dump = fs::temp_directory_path() / "lhtl_state_dump.json";
    fs::remove(dump);
    const auto r = run("verify --theta-max 0.5 --dump-state " + dump.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("paper-bracket discrepancy") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);

    std::ifstream f(dump);
    REQUIRE(f.good());
    const auto j = nlohmann::json::parse(f);
    CHECK(j["dim"] == 24);
    CHECK(j["entries"].size() == 24 * 24);
    fs::remove(dump);
}

TEST_CASE("verify exits 4 when the leakage tolerance is unreachable") {
    const auto r = run("verify --tol 1e-30");
    CHECK(r.exit_code == 4);
}
