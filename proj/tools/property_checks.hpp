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

// Brute-force checks shared by the test suites and the acceptance binary.

#ifndef BETAFRAC_TOOLS_PROPERTY_CHECKS_HPP_
#define BETAFRAC_TOOLS_PROPERTY_CHECKS_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "betafrac/graphs.hpp"
#include "betafrac/params.hpp"
#include "betafrac/specfun.hpp"

namespace betafrac::checks {

// Number of sign changes of 2F1(p,q;r;.) on (0,1), from a grid uniform in
// logit(x) plus the sign of the leading behaviour at x = 1. Returns -1 when
// that sign is undetermined (an exact zero limit or r = p + q).
inline int count_zeros(double p, double q, double r, int grid = 4000) {
  auto sgn = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  int zeros = 0, last = 1;
  for (int i = 0; i <= grid; ++i) {
    const double t = -25.0 + 50.0 * i / grid;
    const double x = 1.0 / (1.0 + std::exp(-t)), xc = 1.0 / (1.0 + std::exp(t));
    const int s = sgn(hyp2f1(p, q, r, x, xc, kDefaultSeriesTolerance).value);
    if (s != 0 && s != last) {
      ++zeros;
      last = s;
    }
  }
  const double c = r - p - q;
  int at_one = 0;
  if (c > kIntegerTolerance) {
    at_one = recip_gamma_sign(r) * recip_gamma_sign(c) * recip_gamma_sign(r - p) * recip_gamma_sign(r - q);
  } else if (c < -kIntegerTolerance) {
    at_one = recip_gamma_sign(r) * recip_gamma_sign(-c) * recip_gamma_sign(p) * recip_gamma_sign(q);
  }
  if (at_one == 0) return -1;
  if (at_one != last) ++zeros;
  return zeros;
}

struct KleinOutcome {
  int zeros = 0;
  int klein = 0;
  bool positive = false;
  bool count_ok() const { return zeros == klein || zeros == klein + 1; }
  bool positivity_ok() const { return positive == (zeros == 0); }
};

inline KleinOutcome klein_check(double p, double q, double r) {
  return {count_zeros(p, q, r), klein_index(p, q, r), positivity_membership(p, q, r)};
}

// Random (p, q, r) away from the poles of the lower parameter and from the
// degenerate limits at x = 1.
template <class Gen>
std::array<double, 3> random_pqr(Gen& gen) {
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  while (true) {
    const double p = u(gen), q = u(gen), r = u(gen);
    auto far = [](double x) { return std::abs(x - std::round(x)) > 1e-3 || x > 0.5; };
    if (!far(r) || !far(r - p) || !far(r - q) || !far(p) || !far(q)) continue;
    if (std::abs(r - p - q) < 1e-3) continue;
    return {p, q, r};
  }
}

// Random v in P with a + b - p > 0 and r - a > 0.
template <class Gen>
ClassicParams random_identity_source(Gen& gen) {
  std::uniform_real_distribution<double> pos(0.05, 4.0), any(-3.0, 3.0), top(-3.0, 6.0);
  while (true) {
    const ClassicParams v{pos(gen), pos(gen), any(gen), any(gen), top(gen)};
    if (!(v.a + v.b - v.p > 0 && v.r - v.a > 0)) continue;
    if (existence_report(v).in_P) return v;
  }
}

// Theta on the grid of multiples of 1/8 in [-1, 2], so ties (and hence every
// partition of 5) occur often.
template <class Gen>
ThetaParams random_grid_theta(Gen& gen) {
  std::uniform_int_distribution<int> k(-8, 16);
  ThetaParams t;
  for (double& x : t.theta) x = k(gen) / 8.0;
  return t;
}

struct CycleCheck {
  bool predicted = false;  // cycle_membership
  bool found = false;      // explicit search in G*
  bool same_cycles = false;
  bool all_exist = true;
  int predicted_order = 0;  // classify_small_cycle, exceptional case only
  bool order_found = true;  // some cycle of G* through v0 has that order
  std::string detail;

  bool ok() const { return predicted == found && same_cycles && all_exist && order_found; }
};

// Compares the closed-form cycle test with the cycles of G* and G**.
inline CycleCheck cycle_membership_check(const ThetaParams& theta) {
  CycleCheck out;
  const PartitionGraph gs = build_graph(theta, GraphLevel::kGstar);
  const PartitionGraph gss = build_graph(theta, GraphLevel::kGstarstar);
  const CycleReport rs = enumerate_cycles(gs);
  const CycleReport rss = enumerate_cycles(gss);
  out.same_cycles = cycle_theta_set(gs, rs) == cycle_theta_set(gss, rss);

  const auto v0 = gs.index_of(vertex_of(theta));
  std::set<int> orders;
  for (const auto& c : rs.cycles) {
    if (v0 && std::find(c.begin(), c.end(), *v0) != c.end()) {
      out.found = true;
      orders.insert(static_cast<int>(c.size()));
    }
    for (std::size_t i : c) out.all_exist = out.all_exist && theta_exists(gs.theta_of(gs.vertices[i]));
  }
  const CycleMembership m = cycle_membership(theta);
  out.predicted = m.in_cycle();
  for (const ThetaParams& w : m.six_cycle) out.all_exist = out.all_exist && theta_exists(w);
  if (m.kind == CycleMembership::Kind::kInCycleExceptional) {
    out.predicted_order = classify_small_cycle(theta);
    out.order_found = orders.count(out.predicted_order) > 0;
  }
  if (!out.ok()) {
    out.detail = "theta=(";
    for (int i = 0; i < 5; ++i) out.detail += (i ? "," : "") + std::to_string(theta[i]);
    out.detail += ")";
  }
  return out;
}

// The 30 weight labels of the long Markov chain on the five-letter graph, as
// (letters summed in c, letters summed in d).
inline const std::vector<std::pair<std::string, std::string>>& thirty_step_labels() {
  static const std::vector<std::pair<std::string, std::string>> kLabels = {
      {"xy", "uv"}, {"yu", "xz"}, {"ux", "vy"}, {"xv", "zu"}, {"vz", "xy"}, {"zx", "uv"},
      {"xu", "zy"}, {"uz", "xv"}, {"zx", "uy"}, {"xu", "vz"}, {"uv", "yx"}, {"vy", "uz"},
      {"yu", "vx"}, {"uv", "zy"}, {"vz", "ux"}, {"zu", "vy"}, {"uv", "zx"}, {"vz", "yu"},
      {"zy", "xv"}, {"yx", "zu"}, {"xz", "yv"}, {"zy", "xu"}, {"yx", "vz"}, {"xv", "yu"},
      {"vy", "zx"}, {"yz", "uv"}, {"zu", "yx"}, {"uy", "vz"}, {"yv", "xu"}, {"vx", "yz"}};
  return kLabels;
}

// Follows the labels from `start`: each c names the current head and the next
// one, each d must be the current first pair. Returns the visited vertices
// (start first) or an empty list when a label does not fit.
inline std::vector<Vertex> walk_labels(const Vertex& start,
                                       const std::vector<std::pair<std::string, std::string>>& labels) {
  std::vector<Vertex> out{start};
  Vertex cur = start;
  for (const auto& [c, d] : labels) {
    std::array<char, 2> pair{d[0], d[1]};
    std::sort(pair.begin(), pair.end());
    if (pair != cur.pair_a) return {};
    const std::size_t at = c.find(cur.head);
    if (at == std::string::npos) return {};
    const char next = c[1 - at];
    bool moved = false;
    for (const Vertex& w : successors(cur)) {
      if (w.head == next) {
        cur = w;
        moved = true;
      }
    }
    if (!moved) return {};
    out.push_back(cur);
  }
  return out;
}

}  // namespace betafrac::checks

#endif  // BETAFRAC_TOOLS_PROPERTY_CHECKS_HPP_
