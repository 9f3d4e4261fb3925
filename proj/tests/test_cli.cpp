#include "mvroute/cli.hpp"
#include "mvroute/config.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mvroute;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
    auto t = s;
    while (!t.empty() && t.back() == '\n') {
        t.pop_back();
    }
    return t.substr(t.rfind('\n') + 1);
}

std::string temp_path(const std::string& name) {
    return testing::TempDir() + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream(path) << text;
}

}  // namespace

TEST(Cli, EnergyAverages) {
    EXPECT_EQ(last_line(cli({"energy", "--radix", "2", "--vdd", "1", "--cap", "1"}).out), "average,0.5");
    EXPECT_EQ(last_line(cli({"energy", "--radix", "3", "--vdd", "1", "--cap", "1"}).out), "average,0.333333");
    EXPECT_EQ(last_line(cli({"energy", "--radix", "4", "--vdd", "1", "--cap", "1"}).out), "average,0.277778");
}

TEST(Cli, EnergyJson) {
    const auto r = cli({"--json", "energy", "--radix", "4", "--vdd", "1", "--cap", "1"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j.at("average").get<double>(), 40.0 / 144.0, 1e-12);
}

TEST(Cli, ArchCompareTotals) {
    const auto r = cli({"--json", "arch-compare"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["binary"]["total_transistors"].get<double>(), 15552.0);
    EXPECT_NEAR(j["quaternary"]["total_transistors"].get<double>(), 14484.8, 1e-9);
    EXPECT_NEAR(j["reduction_vs_baseline"].get<double>(), 0.0686, 0.001);

    const auto flat = nlohmann::json::parse(cli({"--json", "arch-compare", "--lof", "1.0"}).out);
    EXPECT_DOUBLE_EQ(flat["quaternary"]["total_transistors"].get<double>(), 13840.0);
}

TEST(Cli, ArchCompareTable) {
    const auto r = cli({"arch-compare"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("15552"), std::string::npos);
    EXPECT_NE(r.out.find("14484.8"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
    const auto r = cli({"verify"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("PASS repeater-states 48/48"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerificationFailureExitsTwo) {
    const auto r = cli({"--set", "technology.pass_vt=0.8", "verify"});
    EXPECT_EQ(r.code, kExitVerification);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, TestVectorLength) {
    const auto r = cli({"testvec", "--radix", "4", "--seed", "1"});
    ASSERT_EQ(r.code, kExitOk);
    const std::string line = last_line(r.out);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 16);
}

TEST(Cli, TrackSweepEnergyColumnDecreases) {
    const auto r = cli({"track-sweep", "--lengths", "1,2,4,8,16,32"});
    ASSERT_EQ(r.code, kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "length_units,delay_ratio,dyn_energy_ratio,leak_ratio,edp_ratio");
    double prev = 1e9;
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (int i = 0; i < 3; ++i) {
            std::getline(cells, cell, ',');
        }
        const double e = std::stod(cell);
        EXPECT_LT(e, prev);
        prev = e;
        ++rows;
    }
    EXPECT_EQ(rows, 6);
}

TEST(Cli, ByteIdenticalReruns) {
    const std::vector<std::string> args{"mc", "--trials", "300", "--seed", "5"};
    EXPECT_EQ(cli(args).out, cli(args).out);
    const std::vector<std::string> sweep{"--json", "track-sweep"};
    EXPECT_EQ(cli(sweep).out, cli(sweep).out);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"bogus"}).code, kExitUsage);
    EXPECT_EQ(cli({"energy", "--radix", "5"}).code, kExitUsage);
    EXPECT_EQ(cli({"--set", "technology.nope=1", "energy"}).code, kExitUsage);
    EXPECT_EQ(cli({"--config", "/nonexistent.ini", "energy"}).code, kExitUsage);
    EXPECT_FALSE(cli({"bogus"}).err.empty());
}

TEST(Cli, HelpNamesReproducedArtifacts) {
    const auto r = cli({"track-sweep", "--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("Reproduces"), std::string::npos);
    const auto top = cli({"--help"});
    EXPECT_EQ(top.code, kExitOk);
    EXPECT_NE(top.out.find("Exit codes"), std::string::npos);
}

TEST(Cli, OutWritesFile) {
    const auto path = temp_path("mvroute_cli_out.csv");
    std::remove(path.c_str());
    const auto r = cli({"--out", path, "energy", "--radix", "2", "--vdd", "1", "--cap", "1"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(last_line(ss.str()), "average,0.5");
}

TEST(Cli, ConfigPrecedence) {
    const auto path = temp_path("mvroute_cli.ini");
    write_file(path, "[technology]\nvdd = 1200mV\nvboost = 1.5V\n");
    const std::vector<std::string> base{"energy", "--radix", "2", "--cap", "1"};

    auto with_file = base;
    with_file.insert(with_file.begin(), {"--config", path});
    EXPECT_EQ(last_line(cli(with_file).out), "average,0.72");

    ::setenv(kConfigEnvVar, path.c_str(), 1);
    EXPECT_EQ(last_line(cli(base).out), "average,0.72");
    auto flag = base;
    flag.insert(flag.end(), {"--vdd", "1"});
    EXPECT_EQ(last_line(cli(flag).out), "average,0.5");
    ::unsetenv(kConfigEnvVar);

    EXPECT_EQ(last_line(cli(base).out), "average,0.405");
}
