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

// Successor graphs on the quotient form head|{.,.}|{.,.} of a theta vector.
//
// A vertex (h, A, B) moves to (e, {h, o}, A) for each choice of e in B, o being
// the remaining element of B. The move carries a second-kind beta weight with
// shapes (h + e, sum A). Vertices are stored as letters; a numeric graph also
// keeps the value of each letter, and equal theta components share a letter.

#ifndef BETAFRAC_GRAPHS_HPP_
#define BETAFRAC_GRAPHS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betafrac/params.hpp"
#include "betafrac/specfun.hpp"

namespace betafrac {

using Partition = std::vector<int>;

struct Vertex {
  char head = 'x';
  std::array<char, 2> pair_a{'x', 'x'};
  std::array<char, 2> pair_b{'x', 'x'};

  static Vertex make(char h, char a0, char a1, char b0, char b1) {
    Vertex v{h, {a0, a1}, {b0, b1}};
    if (v.pair_a[0] > v.pair_a[1]) std::swap(v.pair_a[0], v.pair_a[1]);
    if (v.pair_b[0] > v.pair_b[1]) std::swap(v.pair_b[0], v.pair_b[1]);
    return v;
  }

  // "y|xy|x^2": pairs in ASCII letter order, a repeated letter as a square.
  std::string str() const {
    auto pair = [](const std::array<char, 2>& p) {
      return p[0] == p[1] ? std::string{p[0], '^', '2'} : std::string{p[0], p[1]};
    };
    return std::string{head} + "|" + pair(pair_a) + "|" + pair(pair_b);
  }

  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;
};

// Inverse of Vertex::str. Accepts pairs written "xy", "yx" or "x^2".
inline Vertex parse_vertex(const std::string& s) {
  auto bad = [&] { return DomainError("vertex: cannot parse '" + s + "'"); };
  const auto bar1 = s.find('|');
  const auto bar2 = bar1 == std::string::npos ? bar1 : s.find('|', bar1 + 1);
  if (bar1 != 1 || bar2 == std::string::npos) throw bad();
  auto pair = [&](const std::string& p) -> std::array<char, 2> {
    if (p.size() == 2) return {p[0], p[1]};
    if (p.size() == 3 && p[1] == '^' && p[2] == '2') return {p[0], p[0]};
    throw bad();
  };
  const auto a = pair(s.substr(bar1 + 1, bar2 - bar1 - 1));
  const auto b = pair(s.substr(bar2 + 1));
  return Vertex::make(s[0], a[0], a[1], b[0], b[1]);
}

inline std::vector<Vertex> successors(const Vertex& v) {
  std::vector<Vertex> out;
  for (int i = 0; i < 2; ++i) {
    const char e = v.pair_b[i], o = v.pair_b[1 - i];
    const Vertex w = Vertex::make(e, v.head, o, v.pair_a[0], v.pair_a[1]);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

// Multiplicities of the distinct values among the five components, largest first.
inline Partition partition_of(const ThetaParams& t) {
  std::map<double, int> mult;
  for (double x : t.theta) ++mult[x];
  Partition out;
  for (const auto& [value, m] : mult) out.push_back(m);
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline const std::vector<Partition>& partitions_of_five() {
  static const std::vector<Partition> kAll = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1},
                                              {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  return kAll;
}

namespace detail {

inline void check_partition(const Partition& part) {
  int total = 0;
  for (int m : part) {
    if (m <= 0) throw DomainError("partition: parts must be positive");
    total += m;
  }
  if (total != 5 || !std::is_sorted(part.rbegin(), part.rend())) {
    throw DomainError("partition: expected a non-increasing partition of 5");
  }
}

// Letters for each part, in order of the parts.
inline std::vector<char> partition_letters(const Partition& part) {
  static constexpr char kFive[] = {'x', 'y', 'z', 'u', 'v'};
  std::vector<char> out(kFive, kFive + part.size());
  return out;
}

}  // namespace detail

enum class GraphLevel { kG, kGstar, kGstarstar };

inline std::string to_string(GraphLevel level) {
  switch (level) {
    case GraphLevel::kG: return "g";
    case GraphLevel::kGstar: return "gstar";
    case GraphLevel::kGstarstar: return "gstarstar";
  }
  return "?";
}

inline GraphLevel parse_level(const std::string& s) {
  if (s == "g") return GraphLevel::kG;
  if (s == "gstar") return GraphLevel::kGstar;
  if (s == "gstarstar") return GraphLevel::kGstarstar;
  throw DomainError("unknown graph level '" + s + "'");
}

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

class PartitionGraph {
 public:
  GraphLevel level = GraphLevel::kG;
  Partition partition;
  // Letter multiplicities; for numeric graphs also the value of each letter.
  std::map<char, int> multiplicity;
  std::map<char, double> values;
  // Sorted by Vertex::str(), so index order is string order.
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  bool numeric() const { return !values.empty(); }
  std::size_t size() const { return vertices.size(); }

  std::optional<std::size_t> index_of(const Vertex& v) const {
    const auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_edge(const Vertex& from, const Vertex& to) const {
    const auto i = index_of(from), j = index_of(to);
    return i && j && std::binary_search(edges.begin(), edges.end(), Edge{*i, *j});
  }

  const std::vector<std::size_t>& out(std::size_t i) const { return out_[i]; }

  double value(char letter) const {
    const auto it = values.find(letter);
    if (it == values.end()) throw DomainError("graph: symbolic vertex has no values");
    return it->second;
  }

  // The theta vector of a numeric vertex, pairs in stored order.
  ThetaParams theta_of(const Vertex& v) const {
    return {{value(v.head), value(v.pair_a[0]), value(v.pair_a[1]), value(v.pair_b[0]),
             value(v.pair_b[1])}};
  }

  // Shapes (head + new head, sum of the first pair) of the weight on an edge.
  std::pair<double, double> raw_edge_params(const Edge& e) const {
    const Vertex& s = vertices[e.from];
    const Vertex& t = vertices[e.to];
    return {value(s.head) + value(t.head), value(s.pair_a[0]) + value(s.pair_a[1])};
  }

  bool acceptable(const Edge& e) const {
    const auto [c, d] = raw_edge_params(e);
    return c > 0.0 && d > 0.0;
  }

  // Rebuilds the lookup and adjacency after vertices or edges change.
  void reindex() {
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& x, const Vertex& y) { return x.str() < y.str(); });
    index_.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i) index_[vertices[i]] = i;
    out_.assign(vertices.size(), {});
    for (const Edge& e : edges) out_[e.from].push_back(e.to);
    for (auto& o : out_) std::sort(o.begin(), o.end());
  }

 private:
  std::map<Vertex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
};

namespace detail {

// All distinct arrangements of the letter multiset in quotient form.
inline std::vector<Vertex> all_arrangements(std::vector<char> letters) {
  std::sort(letters.begin(), letters.end());
  std::set<Vertex> seen;
  do {
    seen.insert(Vertex::make(letters[0], letters[1], letters[2], letters[3], letters[4]));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return {seen.begin(), seen.end()};
}

inline void fill_edges(PartitionGraph& g) {
  std::map<Vertex, std::size_t> idx;
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const Vertex& x, const Vertex& y) { return x.str() < y.str(); });
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = i;
  g.edges.clear();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (const Vertex& w : successors(g.vertices[i])) {
      const auto it = idx.find(w);
      if (it != idx.end()) g.edges.push_back({i, it->second});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.reindex();
}

// Drops vertices failing keep(), with their edges, and renumbers.
template <class Keep>
void filter_vertices(PartitionGraph& g, Keep keep) {
  std::vector<std::optional<std::size_t>> remap(g.vertices.size());
  std::vector<Vertex> kept;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (keep(g.vertices[i])) {
      remap[i] = kept.size();
      kept.push_back(g.vertices[i]);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges) {
    if (remap[e.from] && remap[e.to]) edges.push_back({*remap[e.from], *remap[e.to]});
  }
  g.vertices = std::move(kept);
  g.edges = std::move(edges);
  g.reindex();
}

}  // namespace detail

// Symbolic graph of a partition of 5 (level G only).
inline PartitionGraph build_graph(const Partition& part) {
  detail::check_partition(part);
  PartitionGraph g;
  g.partition = part;
  const std::vector<char> names = detail::partition_letters(part);
  std::vector<char> letters;
  for (std::size_t i = 0; i < part.size(); ++i) {
    g.multiplicity[names[i]] = part[i];
    letters.insert(letters.end(), part[i], names[i]);
  }
  g.vertices = detail::all_arrangements(letters);
  detail::fill_edges(g);
  return g;
}

// Letters assigned to the components of theta: distinct values ordered by
// multiplicity (largest first), ties by first appearance.
inline std::array<char, 5> theta_letters(const ThetaParams& t, std::map<char, double>* values = nullptr,
                                         std::map<char, int>* multiplicity = nullptr) {
  std::vector<std::pair<double, int>> distinct;  // value, multiplicity
  for (double x : t.theta) {
    auto it = std::find_if(distinct.begin(), distinct.end(),
                           [&](const auto& d) { return d.first == x; });
    if (it == distinct.end()) {
      distinct.emplace_back(x, 1);
    } else {
      ++it->second;
    }
  }
  std::stable_sort(distinct.begin(), distinct.end(),
                   [](const auto& l, const auto& r) { return l.second > r.second; });
  Partition part;
  for (const auto& d : distinct) part.push_back(d.second);
  const std::vector<char> names = detail::partition_letters(part);
  std::array<char, 5> out{};
  for (int i = 0; i < 5; ++i) {
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      if (distinct[k].first == t.theta[i]) out[i] = names[k];
    }
  }
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    if (values) (*values)[names[k]] = distinct[k].first;
    if (multiplicity) (*multiplicity)[names[k]] = distinct[k].second;
  }
  return out;
}

inline Vertex vertex_of(const ThetaParams& t) {
  const auto l = theta_letters(t);
  return Vertex::make(l[0], l[1], l[2], l[3], l[4]);
}

// Numeric graph of theta at the requested level. Components are compared
// exactly, so coinciding values must be passed as identical doubles.
inline PartitionGraph build_graph(const ThetaParams& t, GraphLevel level) {
  for (double x : t.theta) {
    if (!std::isfinite(x)) throw DomainError("graph: theta must be finite");
  }
  PartitionGraph g;
  g.level = level;
  g.partition = partition_of(t);
  const auto letters = theta_letters(t, &g.values, &g.multiplicity);
  g.vertices = detail::all_arrangements({letters.begin(), letters.end()});
  detail::fill_edges(g);
  if (level == GraphLevel::kG) return g;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges) {
    if (g.acceptable(e)) kept.push_back(e);
  }
  g.edges = std::move(kept);
  g.reindex();
  if (level == GraphLevel::kGstarstar) {
    detail::filter_vertices(g, [&](const Vertex& v) { return theta_exists(g.theta_of(v)); });
  }
  return g;
}

// Second-kind beta shapes carried by an acceptable edge.
inline std::pair<double, double> edge_beta_params(const PartitionGraph& g, const Edge& e) {
  const auto cd = g.raw_edge_params(e);
  if (!(cd.first > 0.0 && cd.second > 0.0)) {
    throw DomainError("edge " + g.vertices[e.from].str() + " -> " + g.vertices[e.to].str() +
                      " is not acceptable");
  }
  return cd;
}

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct CycleReport {
  std::map<int, std::size_t> counts_by_length;
  std::map<int, std::size_t> orbit_counts_by_length;
  // Vertex indices, each cycle starting at its smallest index.
  std::vector<std::vector<std::size_t>> cycles;
  bool partial = false;

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [len, c] : counts_by_length) n += c;
    return n;
  }
};

inline constexpr std::size_t kDefaultMaxCycles = 10'000'000;

// Johnson's elementary circuit enumeration. Self-loops count as order 1.
inline CycleReport enumerate_cycles(const PartitionGraph& g, bool keep_cycles = true,
                                    std::size_t max_cycles = kDefaultMaxCycles) {
  const std::size_t n = g.size();
  CycleReport rep;
  std::vector<char> blocked(n);
  std::vector<std::set<std::size_t>> block_map(n);
  std::vector<std::size_t> stack;

  auto unblock = [&](std::size_t u) {
    std::vector<std::size_t> todo{u};
    while (!todo.empty()) {
      const std::size_t w = todo.back();
      todo.pop_back();
      if (!blocked[w]) continue;
      blocked[w] = 0;
      for (std::size_t x : block_map[w]) todo.push_back(x);
      block_map[w].clear();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (auto& b : block_map) b.clear();
    // Iterative circuit(): frames hold (vertex, next successor slot, found flag).
    struct Frame {
      std::size_t v;
      std::size_t slot;
      bool found;
    };
    std::vector<Frame> frames{{s, 0, false}};
    stack.assign(1, s);
    blocked[s] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succ = g.out(f.v);
      if (f.slot < succ.size()) {
        const std::size_t w = succ[f.slot++];
        if (w < s) continue;
        if (w == s) {
          ++rep.counts_by_length[static_cast<int>(stack.size())];
          if (keep_cycles) rep.cycles.push_back(stack);
          if (rep.total() > max_cycles) {
            throw ResourceError("enumerate_cycles: more than " + std::to_string(max_cycles) +
                                " cycles");
          }
          f.found = true;
        } else if (!blocked[w]) {
          frames.push_back({w, 0, false});
          stack.push_back(w);
          blocked[w] = 1;
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      stack.pop_back();
      if (done.found) {
        unblock(done.v);
      } else {
        for (std::size_t w : succ) {
          if (w >= s) block_map[w].insert(done.v);
        }
      }
      if (!frames.empty() && done.found) frames.back().found = true;
    }
  }
  return rep;
}

namespace detail {

// Letter permutations preserving multiplicity.
inline std::vector<std::map<char, char>> letter_automorphisms(const PartitionGraph& g) {
  std::vector<char> letters;
  for (const auto& [c, m] : g.multiplicity) letters.push_back(c);
  std::vector<char> image = letters;
  std::vector<std::map<char, char>> out;
  do {
    std::map<char, char> sigma;
    bool ok = true;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (g.multiplicity.at(letters[i]) != g.multiplicity.at(image[i])) ok = false;
      sigma[letters[i]] = image[i];
    }
    if (ok) out.push_back(std::move(sigma));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline std::vector<std::size_t> min_rotation(const std::vector<std::size_t>& c) {
  std::vector<std::size_t> best = c, rot = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace detail

// Counts orbits of the cycles in `report` under letter permutations that
// preserve multiplicity. The orbit key is the smallest rotation, over all such
// permutations, of the cycle's sequence of vertex strings.
inline CycleReport orbit_counts(const PartitionGraph& g, CycleReport report) {
  if (g.numeric()) throw DomainError("orbit_counts: requires a symbolic graph");
  if (report.cycles.size() != report.total()) {
    throw DomainError("orbit_counts: report does not hold the explicit cycles");
  }
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& sigma : detail::letter_automorphisms(g)) {
    std::vector<std::size_t> map(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vertex& v = g.vertices[i];
      const Vertex w = Vertex::make(sigma.at(v.head), sigma.at(v.pair_a[0]), sigma.at(v.pair_a[1]),
                                    sigma.at(v.pair_b[0]), sigma.at(v.pair_b[1]));
      map[i] = *g.index_of(w);
    }
    perms.push_back(std::move(map));
  }
  std::set<std::vector<std::size_t>> keys;
  std::vector<std::size_t> mapped;
  for (const auto& c : report.cycles) {
    std::vector<std::size_t> best;
    for (const auto& p : perms) {
      mapped.resize(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) mapped[i] = p[c[i]];
      auto key = detail::min_rotation(mapped);
      if (best.empty() || key < best) best = std::move(key);
    }
    keys.insert(std::move(best));
  }
  report.orbit_counts_by_length.clear();
  for (const auto& k : keys) ++report.orbit_counts_by_length[static_cast<int>(k.size())];
  return report;
}

// A cycle as vertex strings, rotated to start at its smallest string.
inline std::vector<std::string> cycle_key(const PartitionGraph& g, const std::vector<std::size_t>& c) {
  std::vector<std::size_t> r = detail::min_rotation(c);
  std::vector<std::string> out;
  for (std::size_t i : r) out.push_back(g.vertices[i].str());
  return out;
}

// Cycles compared by the numeric theta of their vertices, independent of the
// letters and indices of a particular graph.
inline std::set<std::vector<std::array<double, 5>>> cycle_theta_set(const PartitionGraph& g,
                                                                    const CycleReport& rep) {
  std::set<std::vector<std::array<double, 5>>> out;
  for (const auto& c : rep.cycles) {
    std::vector<std::array<double, 5>> seq;
    for (std::size_t i : c) seq.push_back(g.theta_of(g.vertices[i]).theta);
    auto best = seq;
    for (std::size_t k = 1; k < seq.size(); ++k) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best) best = seq;
    }
    out.insert(std::move(best));
  }
  return out;
}

// Theta with each braced pair sorted increasingly.
inline ThetaParams sort_pairs(ThetaParams t) {
  if (t.theta[1] > t.theta[2]) std::swap(t.theta[1], t.theta[2]);
  if (t.theta[3] > t.theta[4]) std::swap(t.theta[3], t.theta[4]);
  return t;
}

struct CycleMembership {
  enum class Kind { kNotInCycle, kInCycleGeneric, kInCycleExceptional };
  Kind kind = Kind::kNotInCycle;
  // For the exceptional kind: the six vertices v0..v5 of the closed walk.
  std::vector<ThetaParams> six_cycle;

  bool in_cycle() const { return kind != Kind::kNotInCycle; }
};

// The closed walk v0 -> ... -> v5 -> v0 followed when the (2,4) sum is not
// positive. Input pairs must be sorted.
inline std::vector<ThetaParams> exceptional_walk(const ThetaParams& s) {
  const double t1 = s[0], t2 = s[1], t3 = s[2], t4 = s[3], t5 = s[4];
  return {{{t1, t2, t3, t4, t5}}, {{t5, t4, t1, t2, t3}}, {{t3, t2, t5, t4, t1}},
          {{t1, t4, t3, t2, t5}}, {{t5, t2, t1, t4, t3}}, {{t3, t4, t5, t2, t1}}};
}

// Whether the vertex of theta lies on a cycle of the acceptable-edge graph.
inline CycleMembership cycle_membership(const ThetaParams& theta) {
  const ThetaParams s = sort_pairs(theta);
  CycleMembership out;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (i == 1 && j == 3) continue;
      if (!(s[i] + s[j] > 0.0)) return out;
    }
  }
  if (s[1] + s[3] > 0.0) {
    out.kind = CycleMembership::Kind::kInCycleGeneric;
    return out;
  }
  out.kind = CycleMembership::Kind::kInCycleExceptional;
  out.six_cycle = exceptional_walk(s);
  return out;
}

// Order (1, 2, 3 or 6) of the cycle through v0 when the (2,4) sum is not
// positive: the first return of the exceptional walk to v0.
inline int classify_small_cycle(const ThetaParams& theta) {
  const ThetaParams s = sort_pairs(theta);
  if (s[1] + s[3] > 0.0) throw DomainError("classify_small_cycle: theta2 + theta4 > 0");
  const CycleMembership m = cycle_membership(s);
  if (!m.in_cycle()) throw DomainError("classify_small_cycle: vertex is not on a cycle");
  const ThetaParams v0 = sort_pairs(m.six_cycle[0]);
  for (int k = 1; k < 6; ++k) {
    if (sort_pairs(m.six_cycle[k]) == v0) return k;
  }
  return 6;
}

}  // namespace betafrac

#endif  // BETAFRAC_GRAPHS_HPP_
