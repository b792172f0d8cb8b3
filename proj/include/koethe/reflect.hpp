#pragma once

#include <set>
#include <string>
#include <vector>

#include "koethe/errors.hpp"
#include "koethe/quiver.hpp"

namespace koethe {

// Integer vector indexed by the (sorted) vertex list of its quiver.
// Intermediate reflection images may be negative; stored indecomposable
// vectors are componentwise >= 0.
using DimVector = std::vector<long long>;

inline DimVector unit_vector(const Quiver& q, const std::string& v) {
  DimVector e(q.size(), 0);
  e[q.index(v)] = 1;
  return e;
}

// A species after some number of sink reflections: the reflected quiver
// plus, inside each arrow label, the offset recording how many duals that
// bimodule has absorbed.
struct SpeciesState {
  Quiver quiver;
  int stage = 0;
};

// Reflect the species at a sink k: every arrow into k turns around and its
// label advances to the left dual.
inline SpeciesState reflect_state(const SpeciesState& s, const std::string& k) {
  if (!s.quiver.is_sink(k))
    throw reflect_error("vertex '" + k + "' is not a sink at stage " +
                        std::to_string(s.stage));
  std::vector<Arrow> arrows;
  for (const Arrow& a : s.quiver.arrows()) {
    if (a.target == k)
      arrows.push_back(Arrow{k, a.source, a.label.dual()});
    else
      arrows.push_back(a);
  }
  return SpeciesState{Quiver(s.quiver.mode(), s.quiver.vertices(), arrows),
                      s.stage + 1};
}

// The linear reflection at a sink k of the state s:
//
//   y_k = -x_k + sum over arrows i -> k of (right dimension of the arrow's
//         bimodule in this state) * x_i,
//
// all other coordinates unchanged.  The map is an involution; reading the
// coefficients from the state in which k is a sink makes it serve as both
// the forward reflection (towards the next state) and the inverse one
// (back from it).
inline DimVector reflect_vector_at_sink(const SpeciesState& s,
                                        const std::string& k,
                                        const DimVector& x) {
  if (!s.quiver.is_sink(k))
    throw reflect_error("vertex '" + k + "' is not a sink at stage " +
                        std::to_string(s.stage));
  const int ki = s.quiver.index(k);
  DimVector y = x;
  long long acc = -x[ki];
  for (const Arrow& a : s.quiver.arrows())
    if (a.target == k) acc += static_cast<long long>(a.label.rdim()) *
                              x[s.quiver.index(a.source)];
  y[ki] = acc;
  return y;
}

// The tower of species states reached by reflecting along the cyclic
// extension of the admissible sink sequence.  state(j) is the species after
// j reflections; reflected_vertex(j) is the sink of state(j) that gets
// reflected to reach state(j + 1).  States are built on demand.
class CoxeterTower {
 public:
  explicit CoxeterTower(const Quiver& q)
      : admissible_(admissible_sink_sequence(q)) {
    states_.push_back(SpeciesState{q, 0});
  }

  const std::string& reflected_vertex(int j) const {
    return admissible_[static_cast<std::size_t>(j) % admissible_.size()];
  }

  const SpeciesState& state(int j) {
    while (static_cast<int>(states_.size()) <= j)
      states_.push_back(reflect_state(
          states_.back(), reflected_vertex(static_cast<int>(states_.size()) - 1)));
    return states_[static_cast<std::size_t>(j)];
  }

 private:
  std::vector<std::string> admissible_;
  std::vector<SpeciesState> states_;
};

// Applies the inverse reflections s_1^- ... s_t^- to a vector living at
// stage t, recording every intermediate: result[0] is the seed, result[i]
// the image after i inverse steps, so result[t] lives at stage 0.
inline std::vector<DimVector> inverse_reflection_chain(CoxeterTower& tower,
                                                       int t,
                                                       const DimVector& seed) {
  std::vector<DimVector> chain{seed};
  for (int j = t; j >= 1; --j)
    chain.push_back(reflect_vector_at_sink(tower.state(j - 1),
                                           tower.reflected_vertex(j - 1),
                                           chain.back()));
  return chain;
}

struct RepFiniteness {
  bool finite = false;
  int m = 0;  // minimal stage at which every source-seeded vector has died
};

// Representation-finiteness plus the minimal tower bound m: the first stage
// at which, for every source i of the base quiver, the forward-reflected
// unit vector of i has a negative coordinate.  Finiteness itself is read
// off the diagram catalogue; the iteration only computes m.
inline RepFiniteness representation_finiteness(const Quiver& q,
                                               int cap = 10000) {
  if (!classify(q).representation_finite()) return {false, 0};
  CoxeterTower tower(q);
  std::vector<DimVector> tracked;
  for (const std::string& v : sources(q)) tracked.push_back(unit_vector(q, v));
  for (int j = 1; j <= cap; ++j) {
    for (DimVector& x : tracked)
      x = reflect_vector_at_sink(tower.state(j - 1), tower.reflected_vertex(j - 1),
                                 x);
    bool all_dead = true;
    for (const DimVector& x : tracked) {
      bool has_negative = false;
      for (long long c : x)
        if (c < 0) has_negative = true;
      if (!has_negative) all_dead = false;
    }
    if (all_dead) return {true, j};
  }
  throw cap_exceeded_error("reflection tower exceeded " + std::to_string(cap) +
                           " steps");
}

// A dimension vector together with where the enumeration produced it.
struct EnumeratedIndec {
  DimVector vector;
  int t = 0;          // stage whose simple seeded it
  std::string sink;   // the seeding sink of that stage
};

// Dimension vectors of all indecomposables: for every stage t < m and every
// sink v of the stage-t species, pull the unit vector of v down to stage 0
// by inverse reflections; keep the componentwise-nonnegative results, one
// entry per distinct vector, in (t, sink-name) order of first production.
inline std::vector<EnumeratedIndec> enumerate_indecomposables(const Quiver& q,
                                                              int cap = 10000) {
  if (!classify(q).representation_finite())
    throw not_rep_finite_error("quiver is not representation-finite");
  RepFiniteness rf = representation_finiteness(q, cap);
  CoxeterTower tower(q);
  std::vector<EnumeratedIndec> out;
  std::set<DimVector> seen;
  for (int t = 0; t < rf.m; ++t) {
    for (const std::string& v : sinks(tower.state(t).quiver)) {
      DimVector x = inverse_reflection_chain(
          tower, t, unit_vector(tower.state(t).quiver, v)).back();
      bool nonneg = true;
      long long total = 0;
      for (long long c : x) {
        if (c < 0) nonneg = false;
        total += c;
      }
      if (!nonneg || total == 0) continue;
      if (seen.insert(x).second) out.push_back(EnumeratedIndec{x, t, v});
    }
  }
  return out;
}

inline bool is_branch_vector(const Quiver& q, const DimVector& x,
                             int cap = 10000) {
  for (const EnumeratedIndec& e : enumerate_indecomposables(q, cap))
    if (e.vector == x) return true;
  return false;
}

}  // namespace koethe
