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

// Monte Carlo checks built on the maps x -> 1/(1 + w x) with second-kind beta
// weights: one-step identities, backward random continued fractions along
// infinite graph paths, and Markov chains driven by graph cycles.

#ifndef BETAFRAC_SIMULATE_HPP_
#define BETAFRAC_SIMULATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "betafrac/dist.hpp"
#include "betafrac/graphs.hpp"
#include "betafrac/ks.hpp"
#include "betafrac/params.hpp"
#include "betafrac/random.hpp"

namespace betafrac {

inline constexpr std::size_t kDefaultSamples = 100'000;
inline constexpr std::size_t kDefaultBurnIn = 200;
inline constexpr std::size_t kDefaultDepthCap = 1'000'000;
inline constexpr double kDefaultCfTolerance = 1e-12;

using BetaShapes = std::pair<double, double>;

inline double moebius(double w, double x) { return 1.0 / (1.0 + w * x); }

struct DepthSummary {
  std::size_t min = 0;
  double median = 0.0;
  double mean = 0.0;
  std::size_t max = 0;
  std::size_t cap_hits = 0;
};

struct RunReport {
  std::string name;
  std::size_t n_samples = 0;
  double ks_statistic = 0.0;
  double ks_threshold = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
  double alpha = kDefaultKsAlpha;
  bool has_depths = false;
  DepthSummary depths;
};

namespace detail {

inline RunReport make_report(std::string name, const KsResult& ks, std::size_t n,
                             std::uint64_t seed, double alpha) {
  RunReport r;
  r.name = std::move(name);
  r.n_samples = n;
  r.ks_statistic = ks.statistic;
  r.ks_threshold = ks.threshold;
  r.passed = ks.passed();
  r.seed = seed;
  r.alpha = alpha;
  return r;
}

inline DepthSummary summarize_depths(std::vector<std::size_t> depths, std::size_t cap) {
  DepthSummary s;
  if (depths.empty()) return s;
  double total = 0.0;
  for (std::size_t d : depths) {
    total += static_cast<double>(d);
    if (d >= cap) ++s.cap_hits;
  }
  s.mean = total / static_cast<double>(depths.size());
  std::sort(depths.begin(), depths.end());
  s.min = depths.front();
  s.max = depths.back();
  const std::size_t n = depths.size();
  s.median = n % 2 ? static_cast<double>(depths[n / 2])
                   : 0.5 * static_cast<double>(depths[n / 2 - 1] + depths[n / 2]);
  return s;
}

// Draws a weight, kept inside the normal double range so products of maps
// stay finite.
inline double draw_weight(CounterRng& rng, const BetaShapes& cd) {
  const double w = rng.beta_prime(cd.first, cd.second);
  return std::clamp(w, std::numeric_limits<double>::min(), std::numeric_limits<double>::max());
}

}  // namespace detail

inline std::vector<double> sample_beta2(double c, double d, std::size_t n, std::uint64_t seed,
                                        std::uint64_t stream = 0) {
  if (!(c > 0.0 && d > 0.0)) throw DomainError("sample_beta2: shapes must be positive");
  CounterRng rng(seed, stream);
  std::vector<double> out(n);
  for (double& w : out) w = rng.beta_prime(c, d);
  return out;
}

inline double beta2_cdf(double c, double d, double w) {
  if (!(w > 0.0)) return 0.0;
  return regularized_beta(c, d, w / (1.0 + w));
}

// ---------------------------------------------------------------------------
// One application of the basic identity.

enum class IdentityVariant { kDirect, kT };

struct IdentityPlan {
  ClassicParams source;
  BetaShapes weight;
  ClassicParams target;
};

// Source law, weight shapes and target law, after checking the hypotheses.
inline IdentityPlan identity_plan(const ClassicParams& v, IdentityVariant variant) {
  const ExistenceReport rep = existence_report(v);
  if (!rep.in_P) throw DomainError("basic identity: v is not in P");
  const ClassicParams w = variant == IdentityVariant::kT ? apply_transform(v, TransformKind::kT) : v;
  const auto [c, d] = apply_pi(w);
  if (!(c > 0.0)) throw DomainError("basic identity: a+b-p>0 violated");
  if (!(d > 0.0)) throw DomainError("basic identity: r-a>0 violated");
  return {v, {c, d}, apply_transform(w, TransformKind::kM)};
}

// Pushes n draws of BH(source) through x -> 1/(1 + W x) and compares with
// the CDF of `target`.
inline RunReport verify_identity_against(const ClassicParams& source, const BetaShapes& weight,
                                         const ClassicParams& target, std::size_t n,
                                         std::uint64_t seed, double alpha = kDefaultKsAlpha) {
  const BhDistribution from(source);
  const BhDistribution to(target);
  std::vector<double> x = from.sample(n, seed, 0);
  CounterRng rng(seed, 1);
  for (double& xi : x) xi = moebius(detail::draw_weight(rng, weight), xi);
  const KsResult ks = ks_one_sample(std::move(x), [&](double y) { return to.cdf(y); }, alpha);
  return detail::make_report("basic-identity", ks, n, seed, alpha);
}

inline RunReport verify_basic_identity(const ClassicParams& v, IdentityVariant variant,
                                       std::size_t n, std::uint64_t seed,
                                       double alpha = kDefaultKsAlpha) {
  const IdentityPlan plan = identity_plan(v, variant);
  RunReport r = verify_identity_against(plan.source, plan.weight, plan.target, n, seed, alpha);
  r.name = variant == IdentityVariant::kT ? "basic-identity-T" : "basic-identity";
  return r;
}

// ---------------------------------------------------------------------------
// Backward random continued fractions.

// Composition F_1 o ... o F_n of maps x -> 1/(1 + w x), kept as a 2x2
// matrix with non-negative entries plus a log scale. The image of [0,1] is
// the interval between the values at 0 and 1.
class MoebiusInterval {
 public:
  // Appends F on the inside: Z <- Z o F_w.
  void compose(double w) {
    log_det_ += std::log(w);
    const double n00 = m01_ * w, n01 = m00_ + m01_;
    const double n10 = m11_ * w, n11 = m10_ + m11_;
    m00_ = n00;
    m01_ = n01;
    m10_ = n10;
    m11_ = n11;
    const double big = std::max({m00_, m01_, m10_, m11_});
    m00_ /= big;
    m01_ /= big;
    m10_ /= big;
    m11_ /= big;
    log_scale_ += std::log(big);
    ++depth_;
  }

  double at_zero() const { return m01_ / m11_; }
  double at_one() const { return (m00_ + m01_) / (m10_ + m11_); }
  double lo() const { return std::min(at_zero(), at_one()); }
  double hi() const { return std::max(at_zero(), at_one()); }
  double midpoint() const { return 0.5 * (at_zero() + at_one()); }
  // |Z(1) - Z(0)| from the determinant, free of cancellation.
  double width() const {
    return std::exp(log_det_ - 2.0 * log_scale_ - std::log(m10_ + m11_) - std::log(m11_));
  }
  std::size_t depth() const { return depth_; }

 private:
  double m00_ = 1.0, m01_ = 0.0, m10_ = 0.0, m11_ = 1.0;
  double log_scale_ = 0.0;
  double log_det_ = 0.0;
  std::size_t depth_ = 0;
};

// Weight shapes of an infinite backward path v0 <- v1 <- v2 <- ..., stored
// as a finite prefix followed by a repeating block. weight(n) is the law of
// W_n on the edge (v_n, v_{n-1}).
struct PathSpec {
  std::vector<BetaShapes> prefix;
  std::vector<BetaShapes> cycle;
  ClassicParams terminal;  // law expected at v0

  const BetaShapes& weight(std::size_t n) const {
    if (n == 0) throw DomainError("PathSpec: weights are indexed from 1");
    if (n <= prefix.size()) return prefix[n - 1];
    if (cycle.empty()) throw DomainError("PathSpec: path is finite");
    return cycle[(n - 1 - prefix.size()) % cycle.size()];
  }
};

inline PathSpec constant_path(const BetaShapes& cd, const ClassicParams& terminal) {
  return {{}, {cd}, terminal};
}

// Backward path through the vertices of g: `head` lists v0, v1, ..., v_m and
// `tail` repeats forever after it. Every step must be an acceptable edge.
inline PathSpec path_from_vertices(const PartitionGraph& g, const std::vector<Vertex>& head,
                                   const std::vector<Vertex>& tail) {
  if (head.empty()) throw DomainError("path: empty");
  auto label = [&](const Vertex& from, const Vertex& to) {
    const auto i = g.index_of(from), j = g.index_of(to);
    if (!i || !j || !g.has_edge(from, to)) {
      throw DomainError("path: " + from.str() + " -> " + to.str() + " is not an edge");
    }
    return edge_beta_params(g, Edge{*i, *j});
  };
  PathSpec p;
  p.terminal = classic_from_theta(g.theta_of(head.front()));
  for (std::size_t n = 1; n < head.size(); ++n) p.prefix.push_back(label(head[n], head[n - 1]));
  if (!tail.empty()) {
    p.prefix.push_back(label(tail.front(), head.back()));
    for (std::size_t n = 1; n < tail.size(); ++n) p.cycle.push_back(label(tail[n], tail[n - 1]));
    p.cycle.push_back(label(tail.front(), tail.back()));
  }
  return p;
}

struct ContinuedFractionRun {
  std::vector<double> samples;
  RunReport report;
};

// Draws n continued fractions along `path`, each truncated once the image of
// [0,1] is narrower than tol, and tests their law against the terminal BH.
inline ContinuedFractionRun continued_fraction(const PathSpec& path, double tol, std::size_t n,
                                               std::uint64_t seed, double alpha = kDefaultKsAlpha,
                                               std::size_t depth_cap = kDefaultDepthCap) {
  if (!(tol > 0.0)) throw DomainError("continued_fraction: tol must be positive");
  ContinuedFractionRun run;
  run.samples.resize(n);
  std::vector<std::size_t> depths(n);
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng(seed, i);
    MoebiusInterval z;
    while (z.depth() < depth_cap) {
      z.compose(detail::draw_weight(rng, path.weight(z.depth() + 1)));
      if (z.width() < tol) break;
    }
    run.samples[i] = z.midpoint();
    depths[i] = z.depth();
  }
  const BhDistribution law(path.terminal);
  const KsResult ks = ks_one_sample(run.samples, [&](double y) { return law.cdf(y); }, alpha);
  run.report = detail::make_report("continued-fraction", ks, n, seed, alpha);
  run.report.has_depths = true;
  run.report.depths = detail::summarize_depths(std::move(depths), depth_cap);
  return run;
}

// ---------------------------------------------------------------------------
// Markov chains driven by a cycle.

// Forward weight shapes of one block; weights[j] drives the j-th map applied.
struct CycleSpec {
  std::vector<BetaShapes> weights;
  ClassicParams stationary;  // law at the start (and end) of a block
};

// Cycle v0 -> v1 -> ... -> v_{k-1} -> v0 of acceptable edges of g.
inline CycleSpec cycle_from_vertices(const PartitionGraph& g, const std::vector<Vertex>& cycle) {
  if (cycle.empty()) throw DomainError("cycle: empty");
  CycleSpec c;
  c.stationary = classic_from_theta(g.theta_of(cycle.front()));
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const Vertex& from = cycle[j];
    const Vertex& to = cycle[(j + 1) % cycle.size()];
    const auto i0 = g.index_of(from), i1 = g.index_of(to);
    if (!i0 || !i1 || !g.has_edge(from, to)) {
      throw DomainError("cycle: " + from.str() + " -> " + to.str() + " is not an edge");
    }
    c.weights.push_back(edge_beta_params(g, Edge{*i0, *i1}));
  }
  return c;
}

inline double apply_block(const CycleSpec& c, CounterRng& rng, double x) {
  for (const BetaShapes& cd : c.weights) x = moebius(detail::draw_weight(rng, cd), x);
  return x;
}

struct ChainReport {
  RunReport forward;
  RunReport stationarity;
};

// (i) n_chains independent chains started at x0 = 1/2, each run for
// burn_in + steps blocks; the final states are tested against the
// stationary law. (ii) n_chains exact draws of the stationary law are pushed
// through one block and tested against the same law.
inline ChainReport markov_chain(const CycleSpec& cycle, std::size_t steps, std::size_t burn_in,
                                std::size_t n_chains, std::uint64_t seed,
                                double alpha = kDefaultKsAlpha) {
  const BhDistribution law(cycle.stationary);
  auto cdf = [&](double y) { return law.cdf(y); };
  ChainReport out;

  std::vector<double> finals(n_chains);
  for (std::size_t i = 0; i < n_chains; ++i) {
    CounterRng rng(seed, 2 * i);
    double x = 0.5;
    for (std::size_t b = 0; b < burn_in + steps; ++b) x = apply_block(cycle, rng, x);
    finals[i] = x;
  }
  out.forward = detail::make_report("chain-forward", ks_one_sample(std::move(finals), cdf, alpha),
                                    n_chains, seed, alpha);

  std::vector<double> pushed = law.sample(n_chains, seed, 1);
  for (std::size_t i = 0; i < n_chains; ++i) {
    CounterRng rng(seed, 2 * i + 1);
    pushed[i] = apply_block(cycle, rng, pushed[i]);
  }
  out.stationarity = detail::make_report(
      "chain-stationarity", ks_one_sample(std::move(pushed), cdf, alpha), n_chains, seed, alpha);
  return out;
}

}  // namespace betafrac

#endif  // BETAFRAC_SIMULATE_HPP_
