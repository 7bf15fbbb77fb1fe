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

#include <sstream>

#include <gtest/gtest.h>

#include "betafrac/io.hpp"

namespace betafrac {
namespace {

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 1.0}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Json, ReportCarriesSchema) {
  RunReport r;
  r.name = "basic-identity";
  r.n_samples = 10;
  r.passed = true;
  const Json j = to_json(r);
  EXPECT_EQ(j.at("schema"), kJsonSchema);
  EXPECT_EQ(j.at("name"), "basic-identity");
  EXPECT_FALSE(j.contains("truncation_depths"));
  r.has_depths = true;
  r.depths.median = 20;
  EXPECT_EQ(to_json(r).at("truncation_depths").at("median"), 20.0);
}

TEST(Json, ParamsAndExistence) {
  const Json v = to_json(ClassicParams{1, 2, 3, 4, 5});
  EXPECT_EQ(v.dump(), R"({"a":1.0,"b":2.0,"p":3.0,"q":4.0,"r":5.0})");
  const Json rep = to_json(existence_report({1, -1, 1, 1, 2}));
  EXPECT_FALSE(rep.at("in_P").get<bool>());
  EXPECT_FALSE(rep.at("reasons").empty());
}

TEST(Json, CycleCounts) {
  const PartitionGraph g = build_graph(Partition{4, 1});
  const Json j = to_json(g, enumerate_cycles(g), true);
  EXPECT_EQ(j.at("vertices"), 3);
  EXPECT_EQ(j.at("edges"), 4);
  EXPECT_EQ(j.at("counts_by_length").at("2"), 1);
  EXPECT_EQ(j.at("counts_by_length").at("3"), 1);
  EXPECT_EQ(j.at("cycles").size(), 2u);
}

TEST(Dot, RoundTripSymbolic) {
  for (const Partition& part : partitions_of_five()) {
    const PartitionGraph g = build_graph(part);
    const DotGraph back = parse_dot(emit_dot(g));
    const DotGraph expected = dot_view(g);
    EXPECT_EQ(back.vertices, expected.vertices);
    EXPECT_EQ(back.edges, expected.edges);
  }
}

TEST(Dot, RoundTripNumericLevels) {
  const ThetaParams theta{{1, 1, -0.5, 1, 0.5}};
  for (GraphLevel level : {GraphLevel::kG, GraphLevel::kGstar, GraphLevel::kGstarstar}) {
    const PartitionGraph g = build_graph(theta, level);
    const std::string dot = emit_dot(g);
    EXPECT_NE(dot.find("label="), std::string::npos);
    const DotGraph back = parse_dot(dot);
    EXPECT_EQ(back.vertices, dot_view(g).vertices);
    EXPECT_EQ(back.edges, dot_view(g).edges);
  }
}

TEST(Csv, RoundTrip) {
  const std::vector<double> xs{0.1, 1.0 / 3.0, 0.999999999999, 1e-300};
  std::stringstream s;
  write_samples_csv(s, xs);
  EXPECT_EQ(read_samples_csv(s), xs);
}

TEST(Csv, RejectsMissingHeader) {
  std::istringstream s("0.5\n0.25\n");
  EXPECT_THROW(read_samples_csv(s), DomainError);
}

}  // namespace
}  // namespace betafrac
