#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koethe/dimseq.hpp"
#include "koethe/errors.hpp"
#include "koethe/quiver.hpp"
#include "koethe/rep.hpp"

namespace koethe {

enum class FailureKind {
  NotRepresentationFinite,
  ForbiddenType,
  OrientationMismatch,
  DimensionSequenceMismatch,
  ConditionViolated,
};

inline std::string failure_kind_name(FailureKind k) {
  switch (k) {
    case FailureKind::NotRepresentationFinite: return "NotRepresentationFinite";
    case FailureKind::ForbiddenType: return "ForbiddenType";
    case FailureKind::OrientationMismatch: return "OrientationMismatch";
    case FailureKind::DimensionSequenceMismatch:
      return "DimensionSequenceMismatch";
    case FailureKind::ConditionViolated: return "ConditionViolated";
  }
  return "";
}

struct FailureReason {
  FailureKind kind;
  std::string detail;   // forbidden type, violated condition, expected shape
  std::string vertex;   // offending vertex when one can be pointed at
  std::string arrow;    // offending arrow as "src->dst" when relevant
  DimSeq expected;      // for DimensionSequenceMismatch
  DimSeq found;
};

struct ComponentVerdict {
  std::vector<std::string> vertices;
  DiagramType diagram;
  bool rep_finite = false;
  int clause = 0;  // matched catalogue clause 1..8, 0 when none
  std::optional<int> convergence;  // clause 3: index of the interior sink
  std::optional<FailureReason> reason;

  bool koethe() const { return clause != 0; }
};

struct KoetheVerdict {
  bool overall = false;
  std::vector<ComponentVerdict> components;
};

namespace detail {

inline int outdeg(const Quiver& q, const std::string& v) {
  int d = 0;
  for (const Arrow& a : q.arrows())
    if (a.source == v) ++d;
  return d;
}

inline int indeg(const Quiver& q, const std::string& v) {
  int d = 0;
  for (const Arrow& a : q.arrows())
    if (a.target == v) ++d;
  return d;
}

inline int degree(const Quiver& q, const std::string& v) {
  return outdeg(q, v) + indeg(q, v);
}

inline const Arrow* arrow_between(const Quiver& q, const std::string& u,
                                  const std::string& w) {
  for (const Arrow& a : q.arrows())
    if ((a.source == u && a.target == w) || (a.source == w && a.target == u))
      return &a;
  return nullptr;
}

// Vertices of a path component in path order, starting from a chosen leaf.
inline std::vector<std::string> path_order(const Quiver& q,
                                           const std::string& leaf) {
  std::vector<std::string> order{leaf};
  std::string prev, cur = leaf;
  while (static_cast<int>(order.size()) < q.size()) {
    std::string next;
    for (const Arrow& a : q.arrows()) {
      if (a.source == cur && a.target != prev) next = a.target;
      if (a.target == cur && a.source != prev) next = a.source;
    }
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Arms hanging off the branch vertex, each listed from the neighbour of c
// outward, shortest arm first.
inline std::vector<std::vector<std::string>> arms_of(const Quiver& q,
                                                     const std::string& c) {
  std::vector<std::vector<std::string>> arms;
  for (const Arrow& a : q.arrows()) {
    std::string nb;
    if (a.source == c) nb = a.target;
    if (a.target == c) nb = a.source;
    if (nb.empty()) continue;
    std::vector<std::string> arm{nb};
    std::string prev = c, cur = nb;
    while (true) {
      std::string next;
      for (const Arrow& b : q.arrows()) {
        if (b.source == cur && b.target != prev) next = b.target;
        if (b.target == cur && b.source != prev) next = b.source;
      }
      if (next.empty()) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return arms;
}

inline FailureReason seq_mismatch(const Arrow& a, const DimSeq& expected) {
  FailureReason r;
  r.kind = FailureKind::DimensionSequenceMismatch;
  r.arrow = a.source + "->" + a.target;
  r.expected = expected;
  r.found = a.label.reading();
  r.detail = "valued arrow " + r.arrow + " must carry the rank-2 Koethe shape";
  return r;
}

// Clauses 2 and 3: the valued Coxeter path.  With the path written
// v_1 ... v_n so that the length-4 edge is {v_{n-1}, v_n}, either every
// arrow ascends into v_n and the valued arrow is v_{n-1} -> v_n, or the
// valued arrow leaves v_n and the two ends both run into a single sink v_t.
// The valued arrow must carry (2,1,2,1) read from its own source.
inline void decide_b_path(const Quiver& q, ComponentVerdict& out) {
  const int n = q.size();
  std::vector<std::vector<std::string>> candidates;
  for (const std::string& v : q.vertices())
    if (degree(q, v) == 1) {
      std::vector<std::string> order = path_order(q, v);
      std::reverse(order.begin(), order.end());  // valued edge last
      const Arrow* last = arrow_between(q, order[n - 2], order[n - 1]);
      if (last->label.length() == 4) candidates.push_back(order);
    }

  const DimSeq shape = koethe_shape(4);
  std::optional<FailureReason> seq_problem;
  for (int wanted : {2, 3}) {
    for (const std::vector<std::string>& v : candidates) {
      std::vector<int> up;  // +1 when the edge {v_i, v_{i+1}} ascends
      for (int i = 0; i + 1 < n; ++i)
        up.push_back(arrow_between(q, v[static_cast<std::size_t>(i)],
                                   v[static_cast<std::size_t>(i + 1)])
                             ->source == v[static_cast<std::size_t>(i)]
                         ? 1
                         : -1);
      const Arrow* valued = arrow_between(
          q, v[static_cast<std::size_t>(n - 2)], v[static_cast<std::size_t>(n - 1)]);
      if (wanted == 2) {
        if (!std::all_of(up.begin(), up.end(), [](int d) { return d == 1; }))
          continue;
        if (valued->label.reading() == shape) {
          out.clause = 2;
          return;
        }
        seq_problem = seq_mismatch(*valued, shape);
        continue;
      }
      // descending tail after an ascending head, valued arrow leaving v_n
      int t = 0;
      while (t + 1 < n && up[static_cast<std::size_t>(t)] == 1) ++t;
      const bool convergent =
          up[static_cast<std::size_t>(n - 2)] == -1 &&
          std::all_of(up.begin() + t, up.end(), [](int d) { return d == -1; });
      if (convergent) {
        if (valued->label.reading() == shape) {
          out.clause = 3;
          out.convergence = t + 1;
          return;
        }
        seq_problem = seq_mismatch(*valued, shape);
      }
    }
  }
  if (seq_problem) {
    out.reason = seq_problem;
    return;
  }
  FailureReason r;
  r.kind = FailureKind::OrientationMismatch;
  r.detail =
      "path must either ascend into the valued-edge leaf or run from both "
      "ends into a single sink with the valued arrow leaving its leaf";
  out.reason = r;
}

inline void decide_d(const Quiver& q, ComponentVerdict& out) {
  std::string center;
  for (const std::string& v : q.vertices())
    if (degree(q, v) == 3) center = v;
  if (outdeg(q, center) > 2) {
    out.reason = FailureReason{FailureKind::ConditionViolated, "Dn-a", center,
                               "", {}, {}};
    return;
  }
  for (const std::string& v : q.vertices())
    if (degree(q, v) == 2 && outdeg(q, v) > 1) {
      out.reason =
          FailureReason{FailureKind::ConditionViolated, "Dn-b", v, "", {}, {}};
      return;
    }
  out.clause = 4;
}

inline void decide_e6(const Quiver& q, ComponentVerdict& out) {
  std::string center;
  for (const std::string& v : q.vertices())
    if (degree(q, v) == 3) center = v;
  std::vector<std::vector<std::string>> arms = arms_of(q, center);

  const int dc = outdeg(q, center);
  if (dc < 1 || dc > 2) {
    out.reason = FailureReason{FailureKind::ConditionViolated, "E6-a", center,
                               "", {}, {}};
    return;
  }
  for (int arm : {1, 2})  // the two length-2 arms; arms[0] is the short one
    if (outdeg(q, arms[static_cast<std::size_t>(arm)][0]) > 1) {
      out.reason = FailureReason{FailureKind::ConditionViolated, "E6-a",
                                 arms[static_cast<std::size_t>(arm)][0], "",
                                 {}, {}};
      return;
    }
  for (const Arrow& a : q.arrows())
    if (a.target == center && indeg(q, a.source) == 0) {
      out.reason = FailureReason{FailureKind::ConditionViolated, "E6-b",
                                 a.source, "", {}, {}};
      return;
    }
  out.clause = 5;
}

inline void decide_e7(const Quiver& q, ComponentVerdict& out) {
  std::string center;
  for (const std::string& v : q.vertices())
    if (degree(q, v) == 3) center = v;
  std::vector<std::vector<std::string>> arms = arms_of(q, center);
  const std::vector<std::string>& shrt = arms[0];
  const std::vector<std::string>& mid = arms[1];
  const std::vector<std::string>& lng = arms[2];

  auto oriented = [&](const std::string& from, const std::string& to) {
    const Arrow* a = arrow_between(q, from, to);
    return a->source == from && a->target == to;
  };
  const bool ok = oriented(lng[2], lng[1]) && oriented(lng[1], lng[0]) &&
                  oriented(lng[0], center) && oriented(center, mid[0]) &&
                  oriented(mid[0], mid[1]) && oriented(center, shrt[0]);
  if (ok) {
    out.clause = 6;
    return;
  }
  FailureReason r;
  r.kind = FailureKind::OrientationMismatch;
  r.vertex = center;
  r.detail =
      "long arm must run into the branch vertex, the other two arms out of "
      "it";
  out.reason = r;
}

inline ComponentVerdict decide_component(const Quiver& q) {
  ComponentVerdict out;
  out.vertices = q.vertices();
  out.diagram = classify(q);
  out.rep_finite = out.diagram.representation_finite();

  switch (out.diagram.kind) {
    case DiagramKind::Unknown:
      out.reason = FailureReason{FailureKind::NotRepresentationFinite,
                                 "diagram outside the representation-finite "
                                 "catalogue",
                                 "", "", {}, {}};
      break;
    case DiagramKind::A:
      out.clause = 1;
      break;
    case DiagramKind::B:
      decide_b_path(q, out);
      break;
    case DiagramKind::D:
      decide_d(q, out);
      break;
    case DiagramKind::E6:
      decide_e6(q, out);
      break;
    case DiagramKind::E7:
      decide_e7(q, out);
      break;
    case DiagramKind::E8:
    case DiagramKind::F4:
    case DiagramKind::H3:
    case DiagramKind::H4:
      out.reason = FailureReason{FailureKind::ForbiddenType,
                                 out.diagram.name(), "", "", {}, {}};
      break;
    case DiagramKind::G2:
    case DiagramKind::I2: {
      const Arrow& a = q.arrows()[0];
      const DimSeq shape = koethe_shape(a.label.length());
      if (a.label.reading() == shape)
        out.clause = out.diagram.kind == DiagramKind::G2 ? 7 : 8;
      else
        out.reason = seq_mismatch(a, shape);
      break;
    }
  }
  return out;
}

}  // namespace detail

// Matches every connected component against the catalogue of right Koethe
// Coxeter valued quivers: A_n with any orientation; B_n in one of the two
// admissible orientations with the valued arrow carrying (2,1,2,1); D_n and
// E6 under their degree conditions; the unique E7 orientation; G2 and
// I2(p) when the arrow carries (m-2,1,2,...,2,1).  E8, F4, H3 and H4 never
// pass, nor does anything representation-infinite.
inline KoetheVerdict decide_hereditary(const Quiver& q) {
  if (q.mode() != QuiverMode::hereditary)
    throw mode_error("decide_hereditary needs a hereditary-mode quiver");
  KoetheVerdict v;
  v.overall = true;
  for (const Quiver& comp : components(q)) {
    v.components.push_back(detail::decide_component(comp));
    if (!v.components.back().koethe()) v.overall = false;
  }
  return v;
}

// The separated quiver: vertices (i,0) and (i,1) for every vertex i, and an
// arrow (i,0) -> (j,1) with the same label for every arrow i -> j (loops
// included).  Every vertex of the result is a source or a sink.
inline Quiver separated_quiver(const Quiver& q) {
  std::vector<std::string> vertices;
  for (const std::string& v : q.vertices()) {
    vertices.push_back(v + ".0");
    vertices.push_back(v + ".1");
  }
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    arrows.push_back(Arrow{a.source + ".0", a.target + ".1", a.label});
  return Quiver(QuiverMode::hereditary, vertices, arrows);
}

// Radical-square-zero decision: a ring with J^2 = 0 has the Koethe property
// exactly when its separated quiver does as a hereditary one.
inline KoetheVerdict decide_radical_square_zero(const Quiver& q) {
  return decide_hereditary(separated_quiver(q));
}

struct CrossCheckReport {
  bool diagram_verdict = false;     // decide_hereditary
  bool brute_force_verdict = false; // all enumerated tops multiplicity-free
  bool agree = false;
  std::optional<TopViolation> witness;
};

// Runs the diagram decision against the matrix-engine enumeration on a
// simply-laced quiver with trivial labels.  Any disagreement is a defect in
// one of the two routes.
inline CrossCheckReport cross_validate(const Quiver& q, int cap = 10000) {
  CrossCheckReport rep;
  rep.diagram_verdict = decide_hereditary(q).overall;
  rep.brute_force_verdict = true;
  for (const Quiver& comp : components(q)) {
    std::optional<TopViolation> w = find_top_violation(comp, cap);
    if (w) {
      rep.brute_force_verdict = false;
      if (!rep.witness) rep.witness = w;
    }
  }
  rep.agree = (rep.diagram_verdict == rep.brute_force_verdict);
  return rep;
}

}  // namespace koethe
