#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult hgtail(const std::string& args) {
    const std::string cmd = std::string(HGTAIL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult r{-1, {}};
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, PmfJson) {
    const CliResult r = hgtail("pmf -N 10 -M 5 -n 5 -i 3 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["pmf"], "25/63");
    EXPECT_NEAR(doc["pmf_float"].get<double>(), 0.39682539682539683, 1e-16);
}

TEST(Cli, PmfLogBackend) {
    const CliResult r = hgtail("pmf -N 10 -M 5 -n 5 -i 3 --backend log --format json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["backend"], "log");
    EXPECT_NEAR(std::stod(doc["log_pmf"].get<std::string>()), -0.92425890152333194, 1e-13);
}

TEST(Cli, RelaxedBound) {
    const CliResult r = hgtail("bound -N 100 -M 50 -n 100 --t 0.1 --form relaxed");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("0.1353352", 0), 0u) << r.out;
}

TEST(Cli, BoundFromThreshold) {
    const CliResult r = hgtail("bound -N 10 -M 5 -n 5 -k 2 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["t"], "-1/10");
    EXPECT_EQ(doc["vacuous"], true);
    EXPECT_EQ(doc["bound"].get<double>(), 1.0);
}

TEST(Cli, TailBeyondSupport) {
    const CliResult r = hgtail("tail -N 10 -M 5 -n 5 -k 6");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, LowerTailCsv) {
    const CliResult r = hgtail("tail -N 10 -M 5 -n 5 -k 2 --side lower --format csv");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "N,M,n,side,k,backend,tail,tail_float\r\n10,5,5,lower,2,exact,1/2,0.5\r\n");
}

TEST(Cli, MeanAndVariance) {
    EXPECT_EQ(hgtail("mean -N 10 -M 5 -n 5").out, "5/2 (2.5)\n");
    EXPECT_EQ(hgtail("var -N 10 -M 5 -n 5").out, "25/36 (0.6944444444444444)\n");
}

TEST(Cli, SampleIsDeterministic) {
    const CliResult a = hgtail("sample -N 100 -M 40 -n 30 -k 16 --seed 3 --reps 20000 --threads 1 --format json");
    const CliResult b = hgtail("sample -N 100 -M 40 -n 30 -k 16 --seed 3 --reps 20000 --threads 4 --format json");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["replicates"], 20000);
}

TEST(Cli, VerifySinglePoint) {
    const CliResult r = hgtail("verify --N-min 10 --N-max 10 -M 5 -n 5 -k 3 --format json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 1u);
    EXPECT_EQ(doc["rows"][0]["exact_tail"], "1/2");
    EXPECT_EQ(doc["summary"]["violations"], 0);
}

TEST(Cli, InvalidParametersExitTwo) {
    EXPECT_EQ(hgtail("pmf -N 5 -M 6 -n 1 -i 0").exit_code, 2);
    EXPECT_EQ(hgtail("bound -N 10 -M 5 -n 0 -k 1").exit_code, 2);
    EXPECT_EQ(hgtail("bound -N 10 -M 5 -n 5").exit_code, 2);
    EXPECT_EQ(hgtail("frobnicate").exit_code, 2);
    EXPECT_EQ(hgtail("pmf -N 10 -M 5 -n 5 -i 3 --bogus").exit_code, 2);
    EXPECT_EQ(hgtail("verify --N-min 5 --N-max 4").exit_code, 2);
    EXPECT_EQ(hgtail("bound -N 10 -M 5 -n 5 --t abc").exit_code, 2);
}

TEST(Cli, HelpShowsNotationTable) {
    const CliResult r = hgtail("--help");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("MathWorld"), std::string::npos);
}
