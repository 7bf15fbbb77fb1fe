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

#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "betafrac/simulate.hpp"
#include "property_checks.hpp"

namespace betafrac {
namespace {

constexpr std::size_t kN = 100'000;

double bound(std::size_t n, double alpha = kDefaultKsAlpha) {
  return ks_critical_value(alpha) / std::sqrt(static_cast<double>(n));
}

TEST(Ks, Examples) {
  std::vector<double> grid(1000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = (i + 0.5) / grid.size();
  EXPECT_NEAR(ks_one_sample(grid, [](double x) { return x; }).statistic, 0.0005, 1e-12);

  CounterRng rng(1, 0);
  std::vector<double> u(10'000);
  for (double& x : u) x = rng.uniform();
  EXPECT_TRUE(ks_one_sample(u, [](double x) { return x; }).passed());
  const KsResult shifted = ks_one_sample(u, [](double x) { return std::clamp(x - 0.05, 0.0, 1.0); });
  EXPECT_GE(shifted.statistic, 0.04);
  EXPECT_FALSE(shifted.passed());

  std::vector<double> v(10'000);
  for (double& x : v) x = rng.uniform();
  EXPECT_TRUE(ks_two_sample(u, v).passed());
  EXPECT_THROW(ks_one_sample({}, [](double x) { return x; }), std::domain_error);
  EXPECT_THROW(ks_critical_value(0.0), std::domain_error);
}

TEST(Gamma, MatchesBoostCdf) {
  for (double shape : {0.3, 1.0, 4.5}) {
    CounterRng rng(5, 0);
    std::vector<double> g(kN);
    for (double& x : g) x = rng.gamma(shape);
    const KsResult ks = ks_one_sample(g, [&](double x) { return boost::math::gamma_p(shape, x); });
    EXPECT_TRUE(ks.passed()) << "shape " << shape << " D=" << ks.statistic;
  }
}

TEST(BetaPrime, UnitShapes) {
  const std::vector<double> w = sample_beta2(1, 1, kN, 11);
  EXPECT_TRUE(std::all_of(w.begin(), w.end(), [](double x) { return x > 0; }));
  const KsResult ks = ks_one_sample(w, [](double x) { return x / (1 + x); });
  EXPECT_TRUE(ks.passed()) << ks.statistic;
}

TEST(BetaPrime, MeanAndCdf) {
  const std::vector<double> w = sample_beta2(2, 3, kN, 12);
  EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0) / w.size(), 1.0, 0.02);
  EXPECT_TRUE(ks_one_sample(w, [](double x) { return beta2_cdf(2, 3, x); }).passed());
  EXPECT_NEAR(beta2_cdf(1, 1, 3.0), 0.75, 1e-14);
  EXPECT_EQ(beta2_cdf(2, 3, -1.0), 0.0);
  EXPECT_THROW(sample_beta2(0, 1, 10, 1), DomainError);
}

TEST(BasicIdentity, Plan) {
  const IdentityPlan fixed = identity_plan({1, 1, 1, 1, 2}, IdentityVariant::kDirect);
  EXPECT_EQ(fixed.target, (ClassicParams{1, 1, 1, 1, 2}));
  EXPECT_EQ(fixed.weight, (BetaShapes{1, 1}));
  const IdentityPlan germane = identity_plan({2, 1, 2, 1, 5}, IdentityVariant::kDirect);
  EXPECT_EQ(germane.weight, (BetaShapes{1, 3}));
  EXPECT_EQ(germane.target, (ClassicParams{3, 1, 3, 1, 5}));
  const ClassicParams v{2, 1, 2, 1, 5};
  const IdentityPlan t = identity_plan(v, IdentityVariant::kT);
  EXPECT_EQ(t.weight, (BetaShapes{v.a + v.b - v.q, v.r - v.a}));
  EXPECT_EQ(t.target, apply_transform(apply_transform(v, TransformKind::kT), TransformKind::kM));
  EXPECT_THROW(identity_plan({1, -1, 1, 1, 2}, IdentityVariant::kDirect), DomainError);
  // In P but r - a = 0.
  EXPECT_THROW(identity_plan({2, 1, 1, 1, 2}, IdentityVariant::kDirect), DomainError);
}

std::vector<ClassicParams> identity_settings() {
  std::vector<ClassicParams> out{{1, 1, 1, 1, 2}, {2, 1, 2, 1, 5}, {2, 3, 0, 1.5, 4}};
  std::mt19937_64 gen(2026);
  out.push_back(checks::random_identity_source(gen));
  out.push_back(checks::random_identity_source(gen));
  return out;
}

TEST(BasicIdentity, FiveSettings) {
  std::uint64_t seed = 100;
  for (const ClassicParams& v : identity_settings()) {
    const RunReport r = verify_basic_identity(v, IdentityVariant::kDirect, kN, ++seed);
    EXPECT_TRUE(r.passed) << v.a << " " << v.b << " " << v.p << " " << v.q << " " << v.r
                          << " D=" << r.ks_statistic;
    EXPECT_EQ(r.n_samples, kN);
  }
}

TEST(BasicIdentity, TVariantAndRevisitedForm) {
  std::uint64_t seed = 200;
  for (const ClassicParams& v : identity_settings()) {
    // M TS v = T M v, so the revisited target has the law of M v.
    const ClassicParams direct = apply_transform(v, TransformKind::kM);
    const ClassicParams revisited = apply_transform(apply_transform(v, TransformKind::kTS), TransformKind::kM);
    const auto cd = canonicalize(direct).to_array(), cr = canonicalize(revisited).to_array();
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(cd[i], cr[i], 1e-12);
    const BhDistribution a(direct), b(revisited);
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) EXPECT_NEAR(a.cdf(x), b.cdf(x), 1e-10);
    EXPECT_TRUE(verify_basic_identity(v, IdentityVariant::kT, kN, ++seed).passed);
  }
}

TEST(BasicIdentity, NegativeControl) {
  const ClassicParams v{2, 1, 2, 1, 5};
  const IdentityPlan plan = identity_plan(v, IdentityVariant::kDirect);
  ClassicParams wrong = plan.target;
  wrong.a += 0.5;
  const RunReport r = verify_identity_against(plan.source, plan.weight, wrong, kN, 9);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.ks_statistic, 0.02);
}

TEST(MoebiusInterval, NestedAndShrinking) {
  CounterRng rng(3, 0);
  MoebiusInterval z;
  double lo = 0.0, hi = 1.0, width = 1.0;
  for (int i = 0; i < 60; ++i) {
    z.compose(rng.beta_prime(0.7, 1.3));
    EXPECT_GE(z.lo(), lo - 1e-15);
    EXPECT_LE(z.hi(), hi + 1e-15);
    EXPECT_LE(z.width(), width * (1 + 1e-12));
    if (z.width() > 1e-6) {
      EXPECT_NEAR(z.width(), z.hi() - z.lo(), 1e-9 * z.width());
    }
    lo = z.lo();
    hi = z.hi();
    width = z.width();
  }
  EXPECT_EQ(z.depth(), 60u);
}

TEST(PathSpec, Indexing) {
  const PathSpec p{{{1, 2}}, {{3, 4}, {5, 6}}, {1, 1, 1, 1, 2}};
  EXPECT_EQ(p.weight(1), (BetaShapes{1, 2}));
  EXPECT_EQ(p.weight(2), (BetaShapes{3, 4}));
  EXPECT_EQ(p.weight(5), (BetaShapes{5, 6}));
  EXPECT_THROW(p.weight(0), DomainError);
  const PathSpec finite{{{1, 2}}, {}, {1, 1, 1, 1, 2}};
  EXPECT_THROW(finite.weight(2), DomainError);
}

// Li2 by its series after x -> 1 - x reflection; BH(1,1,1,1,2) has CDF
// 6 Li2(x) / pi^2.
double dilog(double x) {
  if (x > 0.5) {
    return std::numbers::pi * std::numbers::pi / 6 - std::log(x) * std::log1p(-x) - dilog(1 - x);
  }
  double s = 0, t = 1;
  for (int k = 1; k < 200; ++k) {
    t *= x;
    s += t / (static_cast<double>(k) * k);
  }
  return s;
}

TEST(ContinuedFraction, SelfLoop) {
  const ContinuedFractionRun run = continued_fraction(constant_path({1, 1}, {1, 1, 1, 1, 2}), 1e-12, kN, 31);
  EXPECT_TRUE(run.report.passed) << run.report.ks_statistic;
  EXPECT_EQ(run.report.depths.cap_hits, 0u);
  EXPECT_GT(run.report.depths.median, 5);
  EXPECT_LT(run.report.depths.median, 60);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  EXPECT_TRUE(ks_one_sample(run.samples, [&](double x) { return 6 * dilog(x) / pi2; }).passed());
}

TEST(ContinuedFraction, Errors) {
  EXPECT_THROW(continued_fraction(constant_path({1, 1}, {1, 1, 1, 1, 2}), 0.0, 10, 1), DomainError);
}

// Two periodic words on the graph of theta = (x, x, y, x, x): symbol 0 walks
// back b <- a, symbol 1 walks back b <- c <- a.
TEST(ContinuedFraction, WordPathsOnFourPlusOne) {
  const double x = 1.0, y = 0.5;
  const PartitionGraph g = build_graph(ThetaParams{{x, x, y, x, x}}, GraphLevel::kGstarstar);
  const Vertex a = parse_vertex("x|xx|xy"), b = parse_vertex("x|xy|xx"), c = parse_vertex("y|xx|xx");
  const PathSpec zeros = path_from_vertices(g, {b}, {a, b});
  const PathSpec mixed = path_from_vertices(g, {b}, {a, b, c, a, b});
  // The terminal law is the Euler image of (2x, 2x, 2x, 2x, 3x+y).
  EXPECT_EQ(canonicalize(zeros.terminal), canonicalize({2 * x, 2 * x, 2 * x, 2 * x, 3 * x + y}));
  const ContinuedFractionRun r0 = continued_fraction(zeros, 1e-12, kN, 41);
  const ContinuedFractionRun r1 = continued_fraction(mixed, 1e-12, kN, 42);
  EXPECT_TRUE(r0.report.passed) << r0.report.ks_statistic;
  EXPECT_TRUE(r1.report.passed) << r1.report.ks_statistic;
  EXPECT_LE(ks_two_sample(r0.samples, r1.samples).statistic, 2 * bound(kN));
  EXPECT_THROW(path_from_vertices(g, {b}, {c}), DomainError);
}

TEST(MarkovChain, SelfLoop) {
  const CycleSpec loop{{{1, 1}}, {1, 1, 1, 1, 2}};
  const ChainReport r = markov_chain(loop, 1, kDefaultBurnIn, 20'000, 51);
  EXPECT_TRUE(r.forward.passed) << r.forward.ks_statistic;
  EXPECT_TRUE(r.stationarity.passed) << r.stationarity.ks_statistic;
}

BetaShapes edge_shapes(const ThetaParams& from, const ThetaParams& to) {
  return {from[0] + to[0], from[1] + from[2]};
}

double beta_law_pdf(double a, double b, double x) {
  return std::exp((a - 1) * std::log(x) + (b - 1) * std::log1p(-x) - log_beta(a, b).log_abs);
}

// v0 = (x, y, x+2y, -y, x) with x > y > 0 returns after six steps; all six
// laws are beta and the last two coincide.
TEST(MarkovChain, ExceptionalBetaCycle) {
  const double x = 2.0, y = 0.5;
  const ThetaParams v0{{x, y, x + 2 * y, -y, x}};
  const CycleMembership m = cycle_membership(v0);
  ASSERT_EQ(m.kind, CycleMembership::Kind::kInCycleExceptional);
  ASSERT_EQ(m.six_cycle.size(), 6u);
  const std::array<std::pair<double, double>, 6> laws = {
      {{x - y, x + y}, {x + 3 * y, x - y}, {x - y, x + 3 * y}, {x + y, x - y}, {x + y, x + y}, {x + y, x + y}}};
  for (int k = 0; k < 6; ++k) {
    const BhDistribution d(classic_from_theta(m.six_cycle[k]));
    for (double t : {0.1, 0.35, 0.6, 0.85}) {
      EXPECT_NEAR(d.pdf(t), beta_law_pdf(laws[k].first, laws[k].second, t), 1e-8) << "step " << k;
    }
  }

  const auto& v = m.six_cycle;
  const DegenerateForm d4 = degenerate_form(classic_from_theta(v[4]));
  const DegenerateForm d5 = degenerate_form(classic_from_theta(v[5]));
  EXPECT_EQ(d4.kind, DegenerateForm::Kind::kBeta);
  EXPECT_EQ(d5.kind, DegenerateForm::Kind::kBeta);
  EXPECT_EQ(d4.a, d5.a);
  EXPECT_EQ(d4.u, d5.u);
  const CycleSpec block{{edge_shapes(v[0], v[1]), edge_shapes(v[1], v[2]), edge_shapes(v[2], v[3]),
                         edge_shapes(v[3], v[4]), edge_shapes(v[5], v[0])},
                        classic_from_theta(v[0])};
  const ChainReport r = markov_chain(block, 1, 50, 20'000, 61);
  EXPECT_TRUE(r.forward.passed) << r.forward.ks_statistic;
  EXPECT_TRUE(r.stationarity.passed) << r.stationarity.ks_statistic;

  // beta(x+y, x+y) through the last map gives beta(x-y, x+y).
  const RunReport last =
      verify_identity_against(classic_from_theta(v[5]), edge_shapes(v[5], v[0]), classic_from_theta(v[0]), kN, 62);
  EXPECT_TRUE(last.passed) << last.ks_statistic;
}

TEST(MarkovChain, ThirtyStepCycle) {
  const std::map<char, double> value{{'x', 1.0}, {'y', 1.1}, {'z', 1.2}, {'u', 1.3}, {'v', 1.4}};
  const ThetaParams theta{{value.at('x'), value.at('u'), value.at('v'), value.at('y'), value.at('z')}};
  const std::vector<Vertex> walk = checks::walk_labels(parse_vertex("x|uv|yz"), checks::thirty_step_labels());
  ASSERT_EQ(walk.size(), 31u);
  EXPECT_EQ(walk.front(), walk.back());

  const PartitionGraph g = build_graph(theta, GraphLevel::kGstarstar);
  // Numeric graphs name their own letters, so match vertices by theta.
  std::vector<Vertex> cycle;
  for (std::size_t k = 0; k < 30; ++k) {
    ThetaParams t;
    t.theta = {value.at(walk[k].head), value.at(walk[k].pair_a[0]), value.at(walk[k].pair_a[1]),
               value.at(walk[k].pair_b[0]), value.at(walk[k].pair_b[1])};
    for (const Vertex& gv : g.vertices) {
      if (sort_pairs(g.theta_of(gv)) == sort_pairs(t)) cycle.push_back(gv);
    }
  }
  ASSERT_EQ(cycle.size(), 30u);
  const CycleSpec spec = cycle_from_vertices(g, cycle);
  const auto& labels = checks::thirty_step_labels();
  for (std::size_t k = 0; k < 30; ++k) {
    const double c = value.at(labels[k].first[0]) + value.at(labels[k].first[1]);
    const double d = value.at(labels[k].second[0]) + value.at(labels[k].second[1]);
    EXPECT_NEAR(spec.weights[k].first, c, 1e-12) << k;
    EXPECT_NEAR(spec.weights[k].second, d, 1e-12) << k;
  }
  const ChainReport r = markov_chain(spec, 1, 10, 20'000, 71);
  EXPECT_TRUE(r.forward.passed) << r.forward.ks_statistic;
  EXPECT_TRUE(r.stationarity.passed) << r.stationarity.ks_statistic;
}

TEST(Determinism, SameSeedSameOutput) {
  const PathSpec path = constant_path({2, 1}, {1, 1, 1, 1, 2});
  const ContinuedFractionRun a = continued_fraction(path, 1e-10, 500, 7);
  const ContinuedFractionRun b = continued_fraction(path, 1e-10, 500, 7);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.report.ks_statistic, b.report.ks_statistic);
  EXPECT_NE(a.samples, continued_fraction(path, 1e-10, 500, 8).samples);
  EXPECT_EQ(sample_beta2(1, 2, 100, 3, 4), sample_beta2(1, 2, 100, 3, 4));
  const CycleSpec loop{{{1, 1}}, {1, 1, 1, 1, 2}};
  EXPECT_EQ(markov_chain(loop, 1, 5, 300, 9).forward.ks_statistic,
            markov_chain(loop, 1, 5, 300, 9).forward.ks_statistic);
}

}  // namespace
}  // namespace betafrac
