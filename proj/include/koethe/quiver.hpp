#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "koethe/dimseq.hpp"
#include "koethe/errors.hpp"

namespace koethe {

// The cyclic sequence of right dimensions of the iterated left duals of a
// bimodule, stored with a rotation offset so that reflecting a species can
// advance it in place.  entry(0) and entry(1) are the right and left
// dimensions of the bimodule in its current position.  A label with
// finite == false records only a 2-periodic valuation (d, e) with d*e >= 4;
// such a bimodule ring has infinitely many indecomposables, so no finite
// cyclic sequence exists for it.
struct DualizationSequence {
  std::vector<int> entries{1, 1, 1};
  int offset = 0;
  bool finite = true;

  static DualizationSequence trivial() { return DualizationSequence{}; }

  // Shorthand expansion of a bare valuation (d, e): the 2-periodic
  // dimension sequences (1,1), (1,2), (2,1), (1,3), (3,1) expand to cyclic
  // sequences of length 3, 4, 4, 6, 6; anything with d*e >= 4 is flagged
  // as having an infinite tower.
  static DualizationSequence from_valuation(int d, int e) {
    if (d < 1 || e < 1) throw sequence_error("valuations must be >= 1");
    DualizationSequence s;
    if (d == 1 && e == 1) {
      s.entries = {1, 1, 1};
    } else if (d * e == 2) {
      s.entries = {d, e, d, e};
    } else if (d * e == 3) {
      s.entries = {d, e, d, e, d, e};
    } else {
      s.entries = {d, e};
      s.finite = false;
    }
    return s;
  }

  int period() const { return finite ? static_cast<int>(entries.size()) : 2; }
  int length() const { return static_cast<int>(entries.size()); }

  int entry(int j) const {
    const int p = period();
    return entries[static_cast<std::size_t>(((offset + j) % p + p) % p)];
  }

  int rdim() const { return entry(0); }
  int ldim() const { return entry(1); }

  // Same cyclic data read k steps further (k may be negative).
  DualizationSequence shifted(int k) const {
    DualizationSequence s = *this;
    const int p = period();
    s.offset = ((offset + k) % p + p) % p;
    return s;
  }

  // Label of the left dual: same cyclic data, read one step further.
  DualizationSequence dual() const { return shifted(1); }

  // Entries rotated so that the current reading position is index 0.
  std::vector<int> reading() const {
    std::vector<int> r(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j)
      r[j] = entry(static_cast<int>(j));
    return r;
  }

  friend bool operator==(const DualizationSequence& a,
                         const DualizationSequence& b) {
    return a.finite == b.finite && a.reading() == b.reading();
  }
};

struct Arrow {
  std::string source;
  std::string target;
  DualizationSequence label = DualizationSequence::trivial();

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.source == b.source && a.target == b.target && a.label == b.label;
  }
};

enum class QuiverMode { hereditary, general };

// Finite directed graph whose arrows carry dualization sequences; the
// combinatorial stand-in for a species.  Hereditary mode models basic
// hereditary rings (no loops, no two arrows on the same vertex pair, no
// directed cycles); general mode models radical-square-zero bimodule data
// (loops and 2-cycles allowed, at most one arrow per ordered pair).
class Quiver {
 public:
  Quiver() = default;

  Quiver(QuiverMode mode, std::vector<std::string> vertices,
         std::vector<Arrow> arrows)
      : mode_(mode), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (const std::string& v : vertices_) {
      if (v.empty()) throw invalid_quiver_error("empty vertex name");
      for (unsigned char c : v)
        if (std::isspace(c))
          throw invalid_quiver_error("whitespace in vertex name '" + v + "'");
    }
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
        vertices_.end())
      throw invalid_quiver_error("duplicate vertex name");

    std::set<std::pair<std::string, std::string>> seen;
    for (const Arrow& a : arrows_) {
      index(a.source);
      index(a.target);
      if (a.label.finite && !validate_cyclic(a.label.entries))
        throw sequence_error("arrow " + a.source + " -> " + a.target +
                             " carries a non-cyclic dimension sequence");
      if (mode_ == QuiverMode::hereditary) {
        if (a.source == a.target)
          throw invalid_quiver_error("loop at " + a.source +
                                     " not allowed in hereditary mode");
        auto key = std::minmax(a.source, a.target);
        if (!seen.insert({key.first, key.second}).second)
          throw invalid_quiver_error("two arrows between " + a.source +
                                     " and " + a.target);
      } else {
        if (!seen.insert({a.source, a.target}).second)
          throw invalid_quiver_error("parallel arrows " + a.source + " -> " +
                                     a.target);
      }
    }
    if (mode_ == QuiverMode::hereditary && has_directed_cycle())
      throw cyclic_quiver_error("hereditary quiver has a directed cycle");
  }

  QuiverMode mode() const { return mode_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  int index(const std::string& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw invalid_quiver_error("unknown vertex '" + v + "'");
    return static_cast<int>(it - vertices_.begin());
  }

  bool has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool is_sink(const std::string& v) const {
    index(v);
    for (const Arrow& a : arrows_)
      if (a.source == v) return false;
    return true;
  }

  bool is_source(const std::string& v) const {
    index(v);
    for (const Arrow& a : arrows_)
      if (a.target == v) return false;
    return true;
  }

  bool has_directed_cycle() const {
    // Kahn peeling on out-degrees.
    std::map<std::string, int> outdeg;
    for (const std::string& v : vertices_) outdeg[v] = 0;
    for (const Arrow& a : arrows_) ++outdeg[a.source];
    std::vector<std::string> stack;
    for (auto& [v, d] : outdeg)
      if (d == 0) stack.push_back(v);
    std::size_t removed = 0;
    std::set<std::string> gone;
    while (!stack.empty()) {
      std::string v = stack.back();
      stack.pop_back();
      gone.insert(v);
      ++removed;
      for (const Arrow& a : arrows_)
        if (a.target == v && !gone.count(a.source))
          if (--outdeg[a.source] == 0) stack.push_back(a.source);
    }
    return removed != vertices_.size();
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    auto key = [](const Arrow& x) { return std::tie(x.source, x.target); };
    std::vector<Arrow> aa = a.arrows_, bb = b.arrows_;
    std::sort(aa.begin(), aa.end(),
              [&](const Arrow& x, const Arrow& y) { return key(x) < key(y); });
    std::sort(bb.begin(), bb.end(),
              [&](const Arrow& x, const Arrow& y) { return key(x) < key(y); });
    return a.mode_ == b.mode_ && a.vertices_ == b.vertices_ && aa == bb;
  }

 private:
  QuiverMode mode_ = QuiverMode::hereditary;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

inline std::vector<std::string> sinks(const Quiver& q) {
  std::vector<std::string> out;
  for (const std::string& v : q.vertices())
    if (q.is_sink(v)) out.push_back(v);
  return out;
}

inline std::vector<std::string> sources(const Quiver& q) {
  std::vector<std::string> out;
  for (const std::string& v : q.vertices())
    if (q.is_source(v)) out.push_back(v);
  return out;
}

// Weakly connected components, ordered by least vertex name; each part
// inherits the mode and its arrows.
inline std::vector<Quiver> components(const Quiver& q) {
  std::map<std::string, std::string> parent;
  for (const std::string& v : q.vertices()) parent[v] = v;
  auto find = [&](std::string v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Arrow& a : q.arrows()) {
    std::string ra = find(a.source), rb = find(a.target);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::string, std::vector<std::string>> parts;
  for (const std::string& v : q.vertices()) parts[find(v)].push_back(v);
  std::vector<Quiver> out;
  for (auto& [root, verts] : parts) {
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows())
      if (find(a.source) == root) arrows.push_back(a);
    out.emplace_back(q.mode(), verts, arrows);
  }
  return out;
}

// Ordering of all vertices such that each one is a sink once every earlier
// vertex has had its arrows reversed; equivalently a reverse topological
// order.  Ties broken by vertex name.
inline std::vector<std::string> admissible_sink_sequence(const Quiver& q) {
  std::set<std::string> done;
  std::vector<std::string> seq;
  while (done.size() < q.vertices().size()) {
    std::string pick;
    for (const std::string& v : q.vertices()) {
      if (done.count(v)) continue;
      bool sink_now = true;
      for (const Arrow& a : q.arrows())
        if (a.source == v && !done.count(a.target)) {
          sink_now = false;
          break;
        }
      if (sink_now) {
        pick = v;
        break;
      }
    }
    if (pick.empty())
      throw cyclic_quiver_error("no admissible sink sequence: directed cycle");
    done.insert(pick);
    seq.push_back(pick);
  }
  return seq;
}

enum class DiagramKind { A, B, D, E6, E7, E8, F4, G2, H3, H4, I2, Unknown };

struct DiagramType {
  DiagramKind kind = DiagramKind::Unknown;
  int n = 0;  // rank for A/B/D (and fixed for E6..H4)
  int p = 0;  // gonality for I2

  static DiagramType A(int n) { return {DiagramKind::A, n, 0}; }
  static DiagramType B(int n) { return {DiagramKind::B, n, 0}; }
  static DiagramType D(int n) { return {DiagramKind::D, n, 0}; }
  static DiagramType I2(int p) { return {DiagramKind::I2, 2, p}; }
  static DiagramType simple(DiagramKind k, int n) { return {k, n, 0}; }
  static DiagramType unknown() { return {}; }

  bool representation_finite() const { return kind != DiagramKind::Unknown; }

  friend bool operator==(const DiagramType& a, const DiagramType& b) {
    return a.kind == b.kind && a.n == b.n && a.p == b.p;
  }

  std::string name() const {
    switch (kind) {
      case DiagramKind::A: return "A" + std::to_string(n);
      case DiagramKind::B: return "B" + std::to_string(n);
      case DiagramKind::D: return "D" + std::to_string(n);
      case DiagramKind::E6: return "E6";
      case DiagramKind::E7: return "E7";
      case DiagramKind::E8: return "E8";
      case DiagramKind::F4: return "F4";
      case DiagramKind::G2: return "G2";
      case DiagramKind::H3: return "H3";
      case DiagramKind::H4: return "H4";
      case DiagramKind::I2: return "I2(" + std::to_string(p) + ")";
      case DiagramKind::Unknown: return "Unknown";
    }
    return "Unknown";
  }
};

namespace detail {

struct UndirectedEdge {
  int u, v;
  int m;  // Coxeter label = length of the dualization sequence
};

// Arm lengths hanging off vertex c in a tree, longest last.
inline std::vector<int> arm_lengths(int c,
                                    const std::vector<std::vector<int>>& adj) {
  std::vector<int> arms;
  for (int s : adj[c]) {
    int len = 1, prev = c, cur = s;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace detail

// Matches the underlying Coxeter valued graph (vertex names and arrow
// directions forgotten, arrows labelled by their sequence length) against
// the catalogue of representation-finite diagrams: A_n, B_n, D_n, E6, E7,
// E8, F4, G2, H3, H4 and I2(p) with p = 5 or p >= 7.  Everything else is
// Unknown, which is exactly the representation-infinite case.  A single
// plain edge comes out as A2.
inline DiagramType classify(const Quiver& q) {
  if (q.mode() != QuiverMode::hereditary)
    throw mode_error("classify needs a hereditary-mode quiver");
  if (components(q).size() != 1)
    throw invalid_quiver_error("classify needs a connected quiver");

  const int n = q.size();
  if (n == 1) return DiagramType::A(1);

  std::vector<detail::UndirectedEdge> edges;
  for (const Arrow& a : q.arrows()) {
    if (!a.label.finite) return DiagramType::unknown();
    edges.push_back({q.index(a.source), q.index(a.target), a.label.length()});
  }
  if (static_cast<int>(edges.size()) != n - 1) return DiagramType::unknown();

  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int deg3 = -1;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() >= 4) return DiagramType::unknown();
    if (adj[v].size() == 3) {
      if (deg3 >= 0) return DiagramType::unknown();
      deg3 = v;
    }
  }

  if (deg3 >= 0) {
    // Branched trees in the catalogue carry no valued edges.
    for (const auto& e : edges)
      if (e.m != 3) return DiagramType::unknown();
    std::vector<int> arms = detail::arm_lengths(deg3, adj);
    if (arms[0] == 1 && arms[1] == 1) return DiagramType::D(n);
    if (arms == std::vector<int>{1, 2, 2})
      return DiagramType::simple(DiagramKind::E6, 6);
    if (arms == std::vector<int>{1, 2, 3})
      return DiagramType::simple(DiagramKind::E7, 7);
    if (arms == std::vector<int>{1, 2, 4})
      return DiagramType::simple(DiagramKind::E8, 8);
    return DiagramType::unknown();
  }

  // Path: walk from an endpoint and read off the edge labels in order.
  int start = 0;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() == 1) start = v;
  std::vector<int> labels;
  int prev = -1, cur = start;
  auto label_of = [&](int u, int v) {
    for (const auto& e : edges)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.m;
    return 0;
  };
  while (static_cast<int>(labels.size()) < n - 1) {
    int next = -1;
    for (int w : adj[cur])
      if (w != prev) next = w;
    labels.push_back(label_of(cur, next));
    prev = cur;
    cur = next;
  }

  std::vector<int> marked;
  for (int i = 0; i < n - 1; ++i)
    if (labels[i] != 3) marked.push_back(i);
  if (marked.empty()) return DiagramType::A(n);
  if (marked.size() >= 2) return DiagramType::unknown();

  const int idx = marked[0], m = labels[idx];
  const bool terminal = (idx == 0 || idx == n - 2);
  if (m == 4) {
    if (terminal) return DiagramType::B(n);
    if (n == 4 && idx == 1) return DiagramType::simple(DiagramKind::F4, 4);
    return DiagramType::unknown();
  }
  if (m == 5) {
    if (n == 2) return DiagramType::I2(5);
    if (n == 3) return DiagramType::simple(DiagramKind::H3, 3);
    if (n == 4 && terminal) return DiagramType::simple(DiagramKind::H4, 4);
    return DiagramType::unknown();
  }
  if (m == 6) return n == 2 ? DiagramType::simple(DiagramKind::G2, 2)
                            : DiagramType::unknown();
  if (m >= 7 && n == 2) return DiagramType::I2(m);
  return DiagramType::unknown();
}

}  // namespace koethe
