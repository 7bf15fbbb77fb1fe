// Copyright 2026 The betafrac Authors
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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace betafrac::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "betafrac");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json parse(const std::string& s) { return Json::parse(s); }

TEST(Cli, CheckFixedPoint) {
  const Result r = call({"check", "--v", "1,1,1,1,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse(r.out);
  EXPECT_EQ(j.at("schema"), kJsonSchema);
  EXPECT_TRUE(j.at("existence").at("in_P").get<bool>());
  EXPECT_EQ(j.at("degenerate"), "none");
}

TEST(Cli, CheckReportsReasons) {
  const Result r = call({"check", "--v", "1,-1,1,1,2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_FALSE(parse(r.out).at("existence").at("in_P").get<bool>());
}

TEST(Cli, ThetaInput) {
  const Result r = call({"check", "--theta", "0.5,0.5,0.5,0.5,0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r.out).at("classic").at("r"), 2.0);
}

TEST(Cli, DensityAndCdf) {
  const Result d = call({"density", "--v", "1,1,1,1,2", "--x", "0.25,0.5"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(parse(d.out).at("pdf").size(), 2u);
  const Result c = call({"cdf", "--v", "1,1,1,1,2", "--x", "0,1"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_NEAR(parse(c.out).at("cdf")[0].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(parse(c.out).at("cdf")[1].get<double>(), 1.0, 1e-15);
}

TEST(Cli, Transform) {
  const Result r = call({"transform", "--v", "2,1,2,1,5", "--kind", "M"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r.out).at("M").at("a"), 3.0);
}

TEST(Cli, CycleCounts) {
  const Result r = call({"cycles", "--partition", "2,2,1", "--orbits"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse(r.out);
  EXPECT_EQ(j.at("vertices"), 11);
  EXPECT_EQ(j.at("counts_by_length").at("7"), 4);
  EXPECT_EQ(j.at("counts_by_length").at("5"), 6);
  EXPECT_EQ(j.at("orbit_counts_by_length").at("7"), 2);
}

TEST(Cli, GraphDotRoundTrip) {
  const Result r = call({"graph", "--partition", "3,1,1", "--dot", "-"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const DotGraph back = parse_dot(r.out);
  const PartitionGraph g = build_graph(Partition{3, 1, 1});
  EXPECT_EQ(back.vertices, dot_view(g).vertices);
  EXPECT_EQ(back.edges, dot_view(g).edges);
}

TEST(Cli, VerifyIdentityPasses) {
  const Result r = call({"verify-identity", "--v", "2,1,2,1,5", "--n", "20000", "--seed", "7"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(parse(r.out).at("passed").get<bool>());
}

TEST(Cli, WrongTerminalFailsVerification) {
  const Result r = call({"simulate-cf", "--v", "2,2,2,2,4", "--weights", "1,1", "--n", "20000", "--seed", "3"});
  EXPECT_EQ(r.code, kExitVerificationFailed) << r.out << r.err;
}

TEST(Cli, SeedMakesRunsReproducible) {
  const std::vector<std::string> args{"simulate-cf", "--v", "1,1,1,1,2", "--weights", "1,1", "--n", "2000", "--seed", "5"};
  const Result a = call(args), b = call(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a.out).at("seed"), 5);
}

TEST(Cli, ChainAndThomaeAndFixtures) {
  EXPECT_EQ(call({"simulate-chain", "--v", "1,1,1,1,2", "--weights", "1,1", "--n", "5000", "--seed", "2"}).code,
            kExitOk);
  EXPECT_EQ(call({"verify-thomae", "--params", "1,1,1,2.5,2.5"}).code, kExitOk);
  EXPECT_EQ(call({"fixtures"}).code, kExitOk);
}

TEST(Cli, DomainErrorIsJsonOnStderr) {
  const Result r = call({"density", "--v", "1,1,1,1,-2.5", "--x", "0.5"});
  EXPECT_EQ(r.code, kExitInvalid);
  const Json e = parse(r.err);
  EXPECT_EQ(e.at("error"), "domain");
  EXPECT_FALSE(e.at("message").get<std::string>().empty());
  EXPECT_EQ(call({"check", "--v", "1,2,3"}).code, kExitInvalid);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(call({"check", "--bogus", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, JsonFileOutput) {
  const std::string path = testing::TempDir() + "betafrac_check.json";
  ASSERT_EQ(call({"check", "--v", "1,1,1,1,2", "--json", path}).code, kExitOk);
  std::ifstream f(path);
  EXPECT_TRUE(Json::parse(f).at("existence").at("in_P").get<bool>());
}

}  // namespace
}  // namespace betafrac::cli
