// Copyright 2026 The cwsgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cwsgraph/cli.hpp"

using namespace cwsgraph;

namespace {

struct Run {
    int code = 0;
    Json report;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cwsgraph");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.err = err.str();
    if (!out.str().empty() && out.str().front() == '{') r.report = Json::parse(out.str());
    return r;
}

Json strip_timings(Json j) {
    j.erase("timings");
    return j;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("cwsgraph_test_" + name)).string();
}

}  // namespace

TEST(Cli, ConstructCyclic) {
    auto r = run({"construct", "--cr", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto &res = r.report["results"];
    EXPECT_EQ(res["n"], 15);
    EXPECT_EQ(res["k"], 9);
    EXPECT_EQ(res["distance"]["exact"], 3);
    EXPECT_EQ(res["parameters"], "[15, 9, 3(exact)]");
    EXPECT_EQ(res["pattern_scan"]["violations"], 0);
    EXPECT_EQ(res["origin"]["family"], "cyclic");
    EXPECT_EQ(r.report["version"], kVersion);
}

TEST(Cli, ConstructRepetitionWritesCodeFile) {
    auto path = temp_path("rep5.json");
    auto r = run({"construct", "--repetition", "5", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["results"]["parameters"], "[5, 1, 5(exact)]");
    auto code = parse_code_spec(path);
    EXPECT_EQ(code.dimension(), 1u);
    std::filesystem::remove(path);
}

TEST(Cli, ConstructTwoDim) {
    auto r = run({"construct", "--cu", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto &res = r.report["results"];
    EXPECT_EQ(res["k"], 186);
    EXPECT_EQ(res["distance"]["exact"], 6);
    EXPECT_EQ(res["distance"]["witness_support"].size(), 6u);
}

TEST(Cli, ConstructBadAlpha) {
    // 0x7 = α^10 in GF(16): order 3, not primitive.
    auto r = run({"construct", "--cr", "2", "--alpha", "0x7"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("BadAlpha"), std::string::npos);
}

TEST(Cli, VerifyPassAndViolation) {
    auto pass = run({"verify", "--graph", "lattice:15", "--code", "cr2", "--m", "2"});
    ASSERT_EQ(pass.code, kExitPass) << pass.err;
    EXPECT_EQ(pass.report["results"]["certificate"]["verdict"], "pass");
    EXPECT_TRUE(pass.report["results"]["certificate"]["witness"].is_null());
    EXPECT_EQ(pass.report["results"]["uniformity"]["m"], 2);
    auto bad = run({"verify", "--graph", "c5", "--code", "rows:11000", "--m", "2"});
    EXPECT_EQ(bad.code, kExitViolation);
    EXPECT_EQ(bad.report["results"]["certificate"]["verdict"], "violation");
    EXPECT_TRUE(bad.report["results"]["certificate"]["witness"].contains("x"));
}

TEST(Cli, VerifyBudgetExitCode) {
    auto r = run({"verify", "--graph", "lattice:15", "--code", "cr2", "--m", "3", "--budget", "100"});
    EXPECT_EQ(r.code, kExitBudget);
}

TEST(Cli, VerifyLengthMismatch) {
    auto r = run({"verify", "--graph", "c5", "--code", "rep6"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("LengthMismatch"), std::string::npos);
}

TEST(Cli, UniformityReport) {
    auto r = run({"uniformity", "--graph", "lattice:8x8", "--cap", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["results"]["m"], 4);
    EXPECT_EQ(r.report["results"]["exact"], true);
}

TEST(Cli, SimulateRoundtrip) {
    auto r = run({"simulate", "roundtrip", "--graph", "c5", "--code", "rep5", "--trials", "100", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_GE(r.report["results"]["min_fidelity"].get<double>(), 1 - 1e-9);
    EXPECT_EQ(r.report["results"]["transcripts"].size(), 100u);
}

TEST(Cli, SimulateForcedOutcomes) {
    auto r = run({"simulate", "encode", "--graph", "c6", "--code", "rows:100110,010011", "--forced-outcomes", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["results"]["transcripts"][0]["encode"]["outcomes"], Json::array({1, 0}));
    EXPECT_EQ(r.report["results"]["transcripts"][0]["encode"]["forced"], true);
}

TEST(Cli, SimulatePartialAndControlled) {
    auto p = run({"simulate", "partial", "--graph", "c6", "--code", "rows:100110,010011", "--which", "1"});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_GE(p.report["results"]["min_residual_fidelity"].get<double>(), 1 - 1e-9);
    auto c = run({"simulate", "controlled-u", "--graph", "c5", "--code", "rep5", "--u", "YIZZI", "--trials", "5"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(c.report["results"]["interactions"], 3);
    auto bad = run({"simulate", "controlled-u", "--graph", "c5", "--code", "rep5", "--u", "ZXZII"});
    EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Cli, SimulateTooManyQubits) {
    auto r = run({"simulate", "encode", "--graph", "c21", "--code", "rep21"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("TooManyQubits"), std::string::npos);
}

TEST(Cli, AmplitudeDump) {
    auto path = temp_path("amps.csv");
    auto r = run({"simulate", "encode", "--graph", "path:3", "--code", "rows:110", "--dump-amplitudes", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "index,re,im");
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) lines++;
    EXPECT_EQ(lines, 8u);
    std::filesystem::remove(path);
}

TEST(Cli, ReportsAreDeterministic) {
    std::vector<std::string> args{"simulate", "roundtrip", "--graph", "c5", "--code", "rep5", "--trials", "5",
                                  "--seed", "11"};
    EXPECT_EQ(strip_timings(run(args).report).dump(), strip_timings(run(args).report).dump());
    std::vector<std::string> v{"verify", "--graph", "lattice:15", "--code", "cr2", "--m", "3"};
    EXPECT_EQ(strip_timings(run(v).report).dump(), strip_timings(run(v).report).dump());
}

TEST(Cli, Calculators) {
    auto h = run({"report", "hamming", "--n", "15", "--k", "9", "--d", "3"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(h.report["results"]["Q"], "23/32");
    auto gv = run({"report", "gv", "--D", "1", "--side", "64"});
    EXPECT_EQ(gv.report["results"]["dimension"], "28");
    auto inf = run({"report", "gv", "--D", "2", "--side", "8"});
    EXPECT_EQ(inf.report["results"]["dimension"], "Infeasible");
    auto alpha = run({"report", "alpha", "--r", "3"});
    EXPECT_EQ(alpha.code, 0);
    EXPECT_NE(alpha.report["results"]["log_one_plus_alpha_base_alpha"].get<std::uint64_t>() % 3, 2u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--graph", "c5"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--graph", "nosuchfile.json", "--code", "rep5"}).code, kExitUsage);
}

TEST(Cli, BinaryExitCodes) {
    std::string cli = CWSGRAPH_CLI_PATH;
    auto status = [&](const std::string &args) {
        int s = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    EXPECT_EQ(status("verify --graph lattice:15 --code cr2 --m 2"), 0);
    EXPECT_EQ(status("verify --graph c5 --code rows:11000 --m 2"), 1);
    EXPECT_EQ(status("verify --graph c5"), 2);
    EXPECT_EQ(status("verify --graph lattice:15 --code cr2 --m 3 --budget 5"), 3);
}

TEST(Cli, EnvironmentThreadCount) {
    setenv("CWSGRAPH_THREADS", "3", 1);
    EXPECT_EQ(env_threads(), 3u);
    setenv("CWSGRAPH_THREADS", "junk", 1);
    EXPECT_EQ(env_threads(), 1u);
    unsetenv("CWSGRAPH_THREADS");
    EXPECT_EQ(env_threads(), 1u);
}

TEST(Cli, SampleFilesParse) {
    std::string dir = CWSGRAPH_SAMPLES_DIR;
    auto r = run({"verify", "--graph", dir + "/graph_c5.json", "--code", dir + "/code_rep5.json", "--m", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto s = run({"construct", "--spec", dir + "/spec_cr2.json"});
    EXPECT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.report["results"]["k"], 9);
}
