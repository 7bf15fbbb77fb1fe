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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 invalid parameters (JSON error on stderr), 64 usage error.

#ifndef BETAFRAC_TOOLS_CLI_HPP_
#define BETAFRAC_TOOLS_CLI_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "betafrac/betafrac.hpp"

namespace betafrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 64;

struct Options {
  std::string v, theta, x, partition, level = "g", dot, json, csv;
  std::string weights, path, cycle, variant = "direct", kind, params;
  double s = 0.0, t = 0.0, tol = 0.0, alpha = kDefaultKsAlpha, p = 0.3;
  std::size_t n = kDefaultSamples, steps = 10, burn_in = kDefaultBurnIn;
  std::uint64_t seed = 1;
  bool orbits = false, list_cycles = false;
};

inline std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(x)) {
      throw DomainError(std::string(what) + ": cannot parse '" + item + "'");
    }
    out.push_back(x);
  }
  if (out.empty()) throw DomainError(std::string(what) + ": empty list");
  return out;
}

inline std::array<double, 5> parse_five(const std::string& text, const char* what) {
  const auto xs = parse_numbers(text, what);
  if (xs.size() != 5) throw DomainError(std::string(what) + ": expected 5 comma-separated values");
  return {xs[0], xs[1], xs[2], xs[3], xs[4]};
}

// Classic parameters from exactly one of --v / --theta.
inline ClassicParams classic_from_options(const Options& o) {
  if (o.v.empty() == o.theta.empty()) throw DomainError("give exactly one of --v or --theta");
  if (!o.v.empty()) return ClassicParams::from_array(parse_five(o.v, "--v"));
  return classic_from_theta({parse_five(o.theta, "--theta")});
}

inline ThetaParams theta_from_options(const Options& o) {
  if (!o.theta.empty()) return {parse_five(o.theta, "--theta")};
  if (!o.v.empty()) return theta_from_classic(ClassicParams::from_array(parse_five(o.v, "--v")));
  throw DomainError("give --theta or --v");
}

inline Partition parse_partition(const std::string& text) {
  Partition part;
  for (double m : parse_numbers(text, "--partition")) {
    if (m != std::floor(m)) throw DomainError("--partition: parts must be integers");
    part.push_back(static_cast<int>(m));
  }
  detail::check_partition(part);
  return part;
}

inline std::vector<BetaShapes> parse_weights(const std::string& text) {
  std::vector<BetaShapes> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto cd = parse_numbers(item, "--weights");
    if (cd.size() != 2 || !(cd[0] > 0.0 && cd[1] > 0.0)) {
      throw DomainError("--weights: each entry is 'c,d' with c,d > 0");
    }
    out.emplace_back(cd[0], cd[1]);
  }
  if (out.empty()) throw DomainError("--weights: empty");
  return out;
}

inline std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_vertex(item));
  if (out.empty()) throw DomainError("empty vertex list");
  return out;
}

// Parameters in both coordinate systems.
inline Json params_json(const ClassicParams& v) {
  return Json{{"classic", to_json(v)}, {"theta", to_json(theta_from_classic(v))}};
}

inline void require_integrable(const ClassicParams& v) {
  const ExistenceReport rep = existence_report(v);
  if (rep.integrable) return;
  std::string why;
  for (const auto& r : rep.reasons) why += (why.empty() ? "" : "; ") + r;
  throw DomainError("parameters do not define a distribution: " + why);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int emit(const Json& j, const Options& o, int code = kExitOk) {
    out_ << j.dump(2) << "\n";
    if (!o.json.empty()) {
      std::ofstream f(o.json);
      if (!f) throw DomainError("cannot write " + o.json);
      f << j.dump(2) << "\n";
    }
    return code;
  }

  void write_csv(const Options& o, const std::vector<double>& xs) {
    if (o.csv.empty()) return;
    std::ofstream f(o.csv);
    if (!f) throw DomainError("cannot write " + o.csv);
    write_samples_csv(f, xs);
  }

  int check(const Options& o) {
    const ClassicParams v = classic_from_options(o);
    Json j = params_json(v);
    j["schema"] = kJsonSchema;
    j["existence"] = to_json(existence_report(v));
    j["canonical"] = to_json(canonicalize(v));
    const DegenerateForm d = degenerate_form(v);
    j["degenerate"] = d.kind == DegenerateForm::Kind::kBeta        ? "beta"
                      : d.kind == DegenerateForm::Kind::kQuasiBeta ? "quasibeta"
                                                                   : "none";
    return emit(j, o);
  }

  int density(const Options& o, bool cumulative) {
    const ClassicParams v = classic_from_options(o);
    require_integrable(v);
    const auto xs = parse_numbers(o.x, "--x");
    Json j = params_json(v);
    j["schema"] = kJsonSchema;
    j["norm_const"] = norm_const(v);
    j["x"] = xs;
    if (cumulative) {
      const BhDistribution law(v);
      Json vals = Json::array();
      for (double x : xs) vals.push_back(law.cdf(x));
      j["cdf"] = std::move(vals);
    } else {
      const double c = norm_const(v);
      Json pdf = Json::array(), raw = Json::array();
      for (double x : xs) {
        const double h = (x > 0.0 && x < 1.0) ? unnormalized_density(v, x) : 0.0;
        raw.push_back(h);
        pdf.push_back(h / c);
      }
      j["unnormalized"] = std::move(raw);
      j["pdf"] = std::move(pdf);
    }
    return emit(j, o);
  }

  int moments(const Options& o) {
    const ClassicParams v = classic_from_options(o);
    require_integrable(v);
    Json j = params_json(v);
    j["schema"] = kJsonSchema;
    j["s"] = o.s;
    j["t"] = o.t;
    j["moment"] = mellin_moment(v, o.s, o.t);
    return emit(j, o);
  }

  int transform(const Options& o) {
    const ClassicParams v = classic_from_options(o);
    Json j = params_json(v);
    j["schema"] = kJsonSchema;
    const auto [c, d] = apply_pi(v);
    Json out{{"M", to_json(apply_transform(v, TransformKind::kM))},
             {"Pi", Json::array({c, d})},
             {"T", to_json(apply_transform(v, TransformKind::kT))},
             {"S", to_json(apply_transform(v, TransformKind::kS))},
             {"TS", to_json(apply_transform(v, TransformKind::kTS))},
             {"canonical", to_json(canonicalize(v))}};
    if (!o.kind.empty()) {
      if (!out.contains(o.kind)) throw DomainError("--kind: expected one of M, Pi, T, S, TS, canonical");
      j[o.kind] = out[o.kind];
    } else {
      j["images"] = std::move(out);
    }
    return emit(j, o);
  }

  PartitionGraph graph_from(const Options& o) {
    const GraphLevel level = parse_level(o.level);
    if (!o.partition.empty()) {
      if (!o.theta.empty() || !o.v.empty()) throw DomainError("give --partition or parameters, not both");
      if (level != GraphLevel::kG) throw DomainError("levels gstar/gstarstar need numeric --theta or --v");
      return build_graph(parse_partition(o.partition));
    }
    return build_graph(theta_from_options(o), level);
  }

  int graph(const Options& o) {
    const PartitionGraph g = graph_from(o);
    const std::string dot = emit_dot(g);
    if (o.dot == "-") {
      out_ << dot;
      return kExitOk;
    }
    if (!o.dot.empty()) {
      std::ofstream f(o.dot);
      if (!f) throw DomainError("cannot write " + o.dot);
      f << dot;
    }
    Json edges = Json::array();
    for (const Edge& e : g.edges) {
      Json je{{"from", g.vertices[e.from].str()}, {"to", g.vertices[e.to].str()}};
      if (g.numeric()) {
        const auto [c, d] = g.raw_edge_params(e);
        je["beta2"] = Json::array({c, d});
      }
      edges.push_back(std::move(je));
    }
    Json vertices = Json::array();
    for (const Vertex& v : g.vertices) vertices.push_back(v.str());
    Json j{{"schema", kJsonSchema}, {"partition", g.partition}, {"level", to_string(g.level)},
           {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
    if (g.numeric()) {
      Json letters = Json::object();
      for (const auto& [c, x] : g.values) letters[std::string(1, c)] = x;
      j["letters"] = std::move(letters);
    }
    return emit(j, o);
  }

  int cycles(const Options& o) {
    const PartitionGraph g = graph_from(o);
    CycleReport rep = enumerate_cycles(g, o.orbits || o.list_cycles);
    if (o.orbits) rep = orbit_counts(g, rep);
    return emit(to_json(g, rep, o.list_cycles), o);
  }

  int simulate_cf(const Options& o) {
    PathSpec path;
    if (!o.weights.empty()) {
      path.cycle = parse_weights(o.weights);
      path.terminal = classic_from_options(o);
    } else {
      if (o.path.empty()) throw DomainError("give --weights with --v, or --path with --theta");
      const PartitionGraph g = build_graph(theta_from_options(o), GraphLevel::kGstarstar);
      const auto vs = parse_vertices(o.path);
      std::vector<Vertex> tail(vs.begin() + 1, vs.end());
      tail.push_back(vs.front());
      path = path_from_vertices(g, {vs.front()}, tail);
    }
    require_integrable(path.terminal);
    const double tol = o.tol > 0.0 ? o.tol : kDefaultCfTolerance;
    ContinuedFractionRun run = continued_fraction(path, tol, o.n, o.seed, o.alpha);
    write_csv(o, run.samples);
    Json j = to_json(run.report);
    j["terminal"] = params_json(path.terminal);
    j["tol"] = tol;
    return emit(j, o, run.report.passed ? kExitOk : kExitVerificationFailed);
  }

  int simulate_chain(const Options& o) {
    CycleSpec spec;
    if (!o.weights.empty()) {
      spec.weights = parse_weights(o.weights);
      spec.stationary = classic_from_options(o);
    } else {
      if (o.cycle.empty()) throw DomainError("give --weights with --v, or --cycle with --theta");
      const PartitionGraph g = build_graph(theta_from_options(o), GraphLevel::kGstarstar);
      spec = cycle_from_vertices(g, parse_vertices(o.cycle));
    }
    require_integrable(spec.stationary);
    const ChainReport rep = markov_chain(spec, o.steps, o.burn_in, o.n, o.seed, o.alpha);
    Json j{{"schema", kJsonSchema},
           {"stationary", params_json(spec.stationary)},
           {"block_length", spec.weights.size()},
           {"forward", to_json(rep.forward)},
           {"stationarity", to_json(rep.stationarity)}};
    const bool ok = rep.forward.passed && rep.stationarity.passed;
    return emit(j, o, ok ? kExitOk : kExitVerificationFailed);
  }

  int verify_identity(const Options& o) {
    const ClassicParams v = classic_from_options(o);
    IdentityVariant variant;
    if (o.variant == "direct") {
      variant = IdentityVariant::kDirect;
    } else if (o.variant == "T") {
      variant = IdentityVariant::kT;
    } else {
      throw DomainError("--variant: expected direct or T");
    }
    const IdentityPlan plan = identity_plan(v, variant);
    const RunReport r = verify_basic_identity(v, variant, o.n, o.seed, o.alpha);
    Json j = to_json(r);
    j["source"] = params_json(plan.source);
    j["weight"] = Json::array({plan.weight.first, plan.weight.second});
    j["target"] = params_json(plan.target);
    return emit(j, o, r.passed ? kExitOk : kExitVerificationFailed);
  }

  // Compares T with T o thomae_image for every choice of the distinguished
  // upper parameter and both orders of the lower pair.
  int verify_thomae(const Options& o) {
    const auto a = parse_five(o.params, "--params");
    const double tol = o.tol > 0.0 ? o.tol : 1e-8;
    Json images = Json::array();
    double worst = 0.0;
    std::size_t compared = 0;
    for (int rot = 0; rot < 3; ++rot) {
      for (int swap = 0; swap < 2; ++swap) {
        std::array<double, 5> src{a[rot % 3], a[(rot + 1) % 3], a[(rot + 2) % 3], a[3], a[4]};
        if (swap) std::swap(src[3], src[4]);
        const auto img = thomae_image(src[0], src[1], src[2], src[3], src[4]);
        Json item{{"args", src}, {"image", img}};
        try {
          const double base = thomae_T(src[0], src[1], src[2], src[3], src[4]);
          const double val = thomae_T(img[0], img[1], img[2], img[3], img[4]);
          const double dev = std::abs(val - base) / std::abs(base);
          worst = std::max(worst, dev);
          ++compared;
          item["value"] = base;
          item["image_value"] = val;
          item["rel_deviation"] = dev;
        } catch (const DomainError& e) {
          item["skipped"] = e.what();
        }
        images.push_back(std::move(item));
      }
    }
    if (compared == 0) throw DomainError("verify-thomae: no admissible image");
    const bool ok = worst <= tol;
    Json j{{"schema", kJsonSchema}, {"args", a},   {"comparisons", images},
           {"max_rel_deviation", worst}, {"tol", tol}, {"passed", ok}};
    return emit(j, o, ok ? kExitOk : kExitVerificationFailed);
  }

  int fixtures(const Options& o) {
    const double tol = o.tol > 0.0 ? o.tol : 1e-9;
    const std::vector<double> grid = midpoint_grid(50);
    Json list = Json::array();
    bool ok = true;
    for (const ClosedFormFixture& f : closed_form_fixtures(o.p)) {
      const auto model = fixture_model(f);
      double worst = 0.0, printed = 0.0;
      for (double x : grid) {
        const double m = model(x);
        worst = std::max(worst, std::abs(m - f.closed_form(x)) / std::abs(m));
        if (f.printed_form) printed = std::max(printed, std::abs(m - f.printed_form(x)) / std::abs(m));
      }
      Json jf{{"id", f.id}, {"params", to_json(f.params)}, {"max_rel_error", worst},
              {"passed", worst <= tol}};
      if (f.printed_form) jf["printed_form_max_rel_error"] = printed;
      ok = ok && worst <= tol;
      list.push_back(std::move(jf));
    }
    Json j{{"schema", kJsonSchema}, {"p", o.p}, {"grid_points", grid.size()}, {"tol", tol},
           {"fixtures", std::move(list)}, {"passed", ok}};
    return emit(j, o, ok ? kExitOk : kExitVerificationFailed);
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

inline std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("BETAFRAC_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw DomainError("BETAFRAC_SEED: not an unsigned integer");
  return v;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Beta-hypergeometric laws, successor graphs and random continued fractions",
               "betafrac"};
  app.require_subcommand(1);
  Options o;

  auto params = [&](CLI::App* sub) {
    sub->add_option("--v", o.v, "classic parameters a,b,p,q,r");
    sub->add_option("--theta", o.theta, "theta parameters t1,...,t5");
  };
  auto output = [&](CLI::App* sub) { sub->add_option("--json", o.json, "also write JSON to FILE"); };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of samples or chains");
    sub->add_option("--seed", o.seed, "seed (default: $BETAFRAC_SEED or 1)");
    sub->add_option("--alpha", o.alpha, "KS significance level");
  };

  auto* check = app.add_subcommand("check", "existence report and parameter forms");
  params(check);
  output(check);
  auto* density = app.add_subcommand("density", "normalized and unnormalized density");
  params(density);
  density->add_option("--x", o.x, "comma-separated points")->required();
  output(density);
  auto* cdf = app.add_subcommand("cdf", "cumulative distribution function");
  params(cdf);
  cdf->add_option("--x", o.x, "comma-separated points")->required();
  output(cdf);
  auto* moments = app.add_subcommand("moments", "E[X^s (1-X)^t]");
  params(moments);
  moments->add_option("--s", o.s, "power of x");
  moments->add_option("--t", o.t, "power of 1-x");
  output(moments);
  auto* transform = app.add_subcommand("transform", "images under M, Pi, T, S, TS");
  params(transform);
  transform->add_option("--kind", o.kind, "one of M, Pi, T, S, TS, canonical");
  output(transform);
  auto* graph = app.add_subcommand("graph", "successor graph");
  params(graph);
  graph->add_option("--partition", o.partition, "partition of 5, e.g. 2,2,1");
  graph->add_option("--level", o.level, "g, gstar or gstarstar");
  graph->add_option("--dot", o.dot, "write DOT to FILE ('-' for stdout)");
  output(graph);
  auto* cycles = app.add_subcommand("cycles", "elementary cycle counts");
  params(cycles);
  cycles->add_option("--partition", o.partition, "partition of 5");
  cycles->add_option("--level", o.level, "g, gstar or gstarstar");
  cycles->add_flag("--orbits", o.orbits, "also count automorphism orbits");
  cycles->add_flag("--list", o.list_cycles, "include the cycles");
  output(cycles);
  auto* cf = app.add_subcommand("simulate-cf", "random continued fraction along a path");
  params(cf);
  cf->add_option("--weights", o.weights, "periodic weight shapes 'c,d;c,d;...' (with --v)");
  cf->add_option("--path", o.path, "backward vertices 'v0;v1;...', repeated (with --theta)");
  cf->add_option("--tol", o.tol, "truncation width");
  cf->add_option("--csv", o.csv, "write samples to FILE");
  sampling(cf);
  output(cf);
  auto* chain = app.add_subcommand("simulate-chain", "Markov chain driven by a cycle");
  params(chain);
  chain->add_option("--weights", o.weights, "block weight shapes 'c,d;...' (with --v)");
  chain->add_option("--cycle", o.cycle, "cycle vertices 'v0;v1;...' (with --theta)");
  chain->add_option("--steps", o.steps, "blocks after burn-in");
  chain->add_option("--burn-in", o.burn_in, "burn-in blocks");
  sampling(chain);
  output(chain);
  auto* identity = app.add_subcommand("verify-identity", "Monte Carlo check of 1/(1+WX)");
  params(identity);
  identity->add_option("--variant", o.variant, "direct or T");
  sampling(identity);
  output(identity);
  auto* thomae = app.add_subcommand("verify-thomae", "3F2(1) invariance under the Thomae map");
  thomae->add_option("--params", o.params, "A,B,C,D,E")->required();
  thomae->add_option("--tol", o.tol, "relative tolerance");
  output(thomae);
  auto* fixtures = app.add_subcommand("fixtures", "closed-form identities on a 50-point grid");
  fixtures->add_option("--p", o.p, "free parameter of the identities");
  fixtures->add_option("--tol", o.tol, "relative tolerance");
  output(fixtures);

  auto error_json = [&](const std::string& kind, const std::string& msg) {
    err << Json{{"schema", kJsonSchema}, {"error", kind}, {"message", msg}}.dump() << "\n";
  };

  try {
    if (auto s = env_seed()) o.seed = *s;
  } catch (const DomainError& e) {
    error_json("validation", e.what());
    return kExitInvalid;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Runner r(out, err);
  try {
    if (*check) return r.check(o);
    if (*density) return r.density(o, false);
    if (*cdf) return r.density(o, true);
    if (*moments) return r.moments(o);
    if (*transform) return r.transform(o);
    if (*graph) return r.graph(o);
    if (*cycles) return r.cycles(o);
    if (*cf) return r.simulate_cf(o);
    if (*chain) return r.simulate_chain(o);
    if (*identity) return r.verify_identity(o);
    if (*thomae) return r.verify_thomae(o);
    if (*fixtures) return r.fixtures(o);
  } catch (const DomainError& e) {
    error_json("domain", e.what());
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    error_json("domain", e.what());
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace betafrac::cli

#endif  // BETAFRAC_TOOLS_CLI_HPP_
