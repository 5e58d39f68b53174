#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace wavelab {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "wavelab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string scenario(const std::string& name) { return std::string(WAVELAB_SCENARIO_DIR) + "/" + name; }

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "wavelab_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(Cli, OracleSjBoundsAtMacs) {
    const auto r = invoke({"oracle", "sj_bounds", "--gamma", "1"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out, "min=2.1447299 max=2.1447299\n");
    EXPECT_EQ(invoke({"oracle", "sj_bounds", "--γ", "1"}).out, r.out);
}

TEST(Cli, OracleCurves) {
    EXPECT_EQ(invoke({"oracle", "squeezed_sigma2", "--gamma", "2", "--t", "0"}).out, "2.0000000\n");
    EXPECT_EQ(invoke({"oracle", "coherent_Sq"}).out, "1.0723649\n");
    EXPECT_EQ(invoke({"oracle", "free_sigma2", "--t", "2"}).out, "2.5000000\n");
    EXPECT_EQ(invoke({"oracle", "coherent_center", "--q0", "0", "--p0", "2", "--t", "1.5707963267948966",
                      "--precision", "3"})
                  .out,
              "2.000\n");
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(invoke({}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"oracle", "sj_bounds", "--bogus", "1"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"oracle", "no_such_curve"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"oracle", "sj_bounds", "--gamma", "-1"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"verify", "/nonexistent.yaml"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"sweep", scenario("squeezed_sweep.yaml"), "--param", "omega", "--values", "1"}).code,
              cli::exit_usage);
    EXPECT_EQ(invoke({"--help"}).code, cli::exit_ok);
}

TEST(Cli, VerifyCoherentScenario) {
    const auto r = invoke({"verify", scenario("coherent_harmonic.yaml")});
    EXPECT_EQ(r.code, cli::exit_ok) << r.out << r.err;
    EXPECT_NE(r.out.find("coherent_constant_SJ"), std::string::npos);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FailedCheckExitsOne) {
    const auto path = temp_dir() / "tight.yaml";
    std::ofstream(path) << R"(schema_version: 1
name: tight
grid: {n: 512, x_min: -12, x_max: 12}
state: {kind: cat, q0: 2, p0: 2}
potential: {kind: harmonic}
time: {dt: 1.0e-2, t_end: 0.5, sample_every: 10}
verify:
  - {check: eur_chain, tolerance: 0}
  - {check: squeezed_SJ_curve}
)";
    // squeezed_SJ_curve on a cat state is a configuration error
    EXPECT_EQ(invoke({"verify", path.string()}).code, cli::exit_usage);
    std::ofstream(path) << R"(schema_version: 1
name: tight
grid: {n: 512, x_min: -12, x_max: 12}
state: {kind: squeezed, gamma: 1.5}
potential: {kind: harmonic}
time: {dt: 1.0e-2, t_end: 0.5, sample_every: 10}
verify:
  - {check: squeezed_SJ_curve, tolerance: 0}
)";
    const auto r = invoke({"verify", path.string()});
    EXPECT_EQ(r.code, cli::exit_check_failed) << r.out << r.err;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, RunWritesDeterministicCsv) {
    const auto dir = temp_dir();
    const auto a = dir / "run_a.csv";
    const auto b = dir / "run_b.csv";
    ASSERT_EQ(invoke({"run", scenario("coherent_harmonic.yaml"), "--output", a.string()}).code, cli::exit_ok);
    ASSERT_EQ(invoke({"run", scenario("coherent_harmonic.yaml"), "--output", b.string()}).code, cli::exit_ok);
    const std::string bytes = read_file(a);
    EXPECT_EQ(bytes.rfind("t,S_q,S_p,S_J,dX,dP,power_product,eur_slack,heisenberg_slack\n", 0), 0u);
    EXPECT_EQ(bytes, read_file(b));
}

TEST(Cli, SweepSummaryIncreasesWithGamma) {
    const auto base = temp_dir() / "sweep.csv";
    const auto r = invoke({"sweep", scenario("squeezed_sweep.yaml"), "--param", "gamma", "--values", "1,2,4", "--output",
                           base.string()});
    ASSERT_EQ(r.code, cli::exit_ok) << r.out << r.err;
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header.rfind("gamma", 0), 0u);
    std::vector<double> maxima;
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        double value = 0;
        double sj_min = 0;
        double sj_max = 0;
        fields >> value >> sj_min >> sj_max;
        maxima.push_back(sj_max);
    }
    ASSERT_EQ(maxima.size(), 3u);
    EXPECT_LT(maxima[0], maxima[1]);
    EXPECT_LT(maxima[1], maxima[2]);
    for (const char* suffix : {"_gamma_1.csv", "_gamma_2.csv", "_gamma_4.csv"}) {
        EXPECT_TRUE(std::filesystem::exists(temp_dir() / (std::string("sweep") + suffix))) << suffix;
    }
}

} // namespace
} // namespace wavelab
