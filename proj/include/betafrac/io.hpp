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

// JSON, DOT and CSV serialization. JSON objects carry "schema": 1.

#ifndef BETAFRAC_IO_HPP_
#define BETAFRAC_IO_HPP_

#include <cstdio>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "betafrac/graphs.hpp"
#include "betafrac/params.hpp"
#include "betafrac/simulate.hpp"

namespace betafrac {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

// %.17g, for text output that must round-trip.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Json to_json(const ClassicParams& v) {
  return Json{{"a", v.a}, {"b", v.b}, {"p", v.p}, {"q", v.q}, {"r", v.r}};
}

inline Json to_json(const ThetaParams& t) { return Json(t.theta); }

inline Json to_json(const ExistenceReport& rep) {
  return Json{{"in_positivity", rep.in_positivity}, {"klein_index", rep.klein_index},
              {"in_P", rep.in_P},                   {"in_Theta", rep.in_Theta},
              {"integrable", rep.integrable},       {"reasons", rep.reasons}};
}

inline Json to_json(const DepthSummary& d) {
  return Json{{"min", d.min},   {"median", d.median},    {"mean", d.mean},
              {"max", d.max}, {"cap_hits", d.cap_hits}};
}

inline Json to_json(const RunReport& r) {
  Json j{{"schema", kJsonSchema},          {"name", r.name},
         {"n_samples", r.n_samples},       {"ks_statistic", r.ks_statistic},
         {"ks_threshold", r.ks_threshold}, {"alpha", r.alpha},
         {"passed", r.passed},             {"seed", r.seed}};
  if (r.has_depths) j["truncation_depths"] = to_json(r.depths);
  return j;
}

namespace detail {

inline Json count_map(const std::map<int, std::size_t>& m) {
  Json j = Json::object();
  for (const auto& [k, c] : m) j[std::to_string(k)] = c;
  return j;
}

}  // namespace detail

inline Json to_json(const PartitionGraph& g, const CycleReport& rep, bool with_cycles) {
  Json j{{"schema", kJsonSchema},
         {"partition", g.partition},
         {"level", to_string(g.level)},
         {"vertices", g.size()},
         {"edges", g.edges.size()},
         {"counts_by_length", detail::count_map(rep.counts_by_length)}};
  if (!rep.orbit_counts_by_length.empty()) {
    j["orbit_counts_by_length"] = detail::count_map(rep.orbit_counts_by_length);
  }
  if (with_cycles) {
    Json cycles = Json::array();
    for (const auto& c : rep.cycles) {
      Json seq = Json::array();
      for (std::size_t i : c) seq.push_back(g.vertices[i].str());
      cycles.push_back(std::move(seq));
    }
    j["cycles"] = std::move(cycles);
  }
  return j;
}

// ---------------------------------------------------------------------------
// DOT.

inline std::string emit_dot(const PartitionGraph& g) {
  std::ostringstream out;
  out << "digraph betafrac {\n";
  out << "  // level=" << to_string(g.level) << " partition=";
  for (std::size_t i = 0; i < g.partition.size(); ++i) out << (i ? "," : "") << g.partition[i];
  out << "\n";
  for (const auto& [letter, value] : g.values) {
    out << "  // " << letter << "=" << format_double(value) << "\n";
  }
  for (const Vertex& v : g.vertices) out << "  \"" << v.str() << "\";\n";
  for (const Edge& e : g.edges) {
    out << "  \"" << g.vertices[e.from].str() << "\" -> \"" << g.vertices[e.to].str() << "\"";
    if (g.numeric()) {
      const auto [c, d] = g.raw_edge_params(e);
      out << " [label=\"" << format_double(c) << "," << format_double(d) << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

struct DotGraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
};

// Reads the subset of DOT written by emit_dot: quoted node statements and
// quoted edge statements, one per line.
inline DotGraph parse_dot(const std::string& text) {
  static const std::regex kEdge(R"re(^\s*"([^"]+)"\s*->\s*"([^"]+)".*;\s*$)re");
  static const std::regex kNode(R"re(^\s*"([^"]+)"\s*(\[.*\])?\s*;\s*$)re");
  DotGraph g;
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, kEdge)) {
      g.vertices.insert(m[1]);
      g.vertices.insert(m[2]);
      g.edges.emplace(m[1], m[2]);
    } else if (std::regex_match(line, m, kNode)) {
      g.vertices.insert(m[1]);
    }
  }
  return g;
}

inline DotGraph dot_view(const PartitionGraph& g) {
  DotGraph d;
  for (const Vertex& v : g.vertices) d.vertices.insert(v.str());
  for (const Edge& e : g.edges) d.edges.emplace(g.vertices[e.from].str(), g.vertices[e.to].str());
  return d;
}

// ---------------------------------------------------------------------------
// CSV.

inline void write_samples_csv(std::ostream& out, const std::vector<double>& xs) {
  out << "x\n";
  for (double x : xs) out << format_double(x) << "\n";
}

inline std::vector<double> read_samples_csv(std::istream& in) {
  std::string line;
  std::vector<double> out;
  if (!std::getline(in, line) || line != "x") throw DomainError("csv: expected header 'x'");
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(std::stod(line));
  }
  return out;
}

}  // namespace betafrac

#endif  // BETAFRAC_IO_HPP_
