#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "koethe/errors.hpp"

namespace koethe {

// Dimension sequences (a_1, ..., a_m): positive integer sequences admitting
// nonnegative solutions of the three-term recurrences
//
//   a_i * x_i = x_{i-1} + x_{i+1},   a_i * y_i = y_{i-1} + y_{i+1}   (1 <= i < m)
//
// with boundary values x_0 = -1, x_1 = 0, x_m = 1 and y_0 = 0, y_1 = 1,
// y_m = 0.  They classify the triangular 2x2 bimodule rings with exactly m
// indecomposable right modules; the x/y solutions are the two coordinates of
// the indecomposables' dimension vectors.

using DimSeq = std::vector<int>;

// Dimension vector of a rank-2 indecomposable: (dim over F, dim over G).
using Rank2Pair = std::pair<long long, long long>;

struct DimSeqWitness {
  DimSeq seq;
  std::vector<long long> x;  // x_0..x_m
  std::vector<long long> y;  // y_0..y_m
  bool valid = false;
};

namespace detail {

inline void check_seq_input(const DimSeq& seq) {
  if (seq.size() < 3)
    throw sequence_error("dimension sequence needs length >= 3, got " +
                         std::to_string(seq.size()));
  for (int a : seq)
    if (a < 1) throw sequence_error("dimension sequence entries must be >= 1");
}

}  // namespace detail

// Runs both recurrences forward from the boundary values.  Note that the
// recurrences consume only a_1..a_{m-1}; a_m is unconstrained here (cyclic
// validity, below, is what pins it down).
inline DimSeqWitness validate(const DimSeq& seq) {
  detail::check_seq_input(seq);
  const int m = static_cast<int>(seq.size());
  DimSeqWitness w;
  w.seq = seq;
  w.x.assign(m + 1, 0);
  w.y.assign(m + 1, 0);
  w.x[0] = -1;
  w.x[1] = 0;
  w.y[0] = 0;
  w.y[1] = 1;
  for (int i = 1; i < m; ++i) {
    w.x[i + 1] = static_cast<long long>(seq[i - 1]) * w.x[i] - w.x[i - 1];
    w.y[i + 1] = static_cast<long long>(seq[i - 1]) * w.y[i] - w.y[i - 1];
  }
  w.valid = (w.x[m] == 1 && w.y[m] == 0);
  for (int i = 1; i <= m && w.valid; ++i)
    if (w.x[i] < 0 || w.y[i] < 0) w.valid = false;
  return w;
}

// True iff every cyclic rotation of seq passes validate.  Stored arrow
// labels are required to be cyclically valid, matching the convention that
// dualization sequences are considered up to cyclic permutation.
inline bool validate_cyclic(const DimSeq& seq) {
  detail::check_seq_input(seq);
  DimSeq rot = seq;
  for (std::size_t r = 0; r < seq.size(); ++r) {
    if (!validate(rot).valid) return false;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return true;
}

// Lexicographically least sequence among all rotations of seq and of its
// reversal.  Two sequences agree here iff one is a rotation or a
// reversal-then-rotation of the other.
inline DimSeq canonical_class(const DimSeq& seq) {
  DimSeq best = seq;
  DimSeq rot = seq;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      if (rot < best) best = rot;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    std::reverse(rot.begin(), rot.end());
  }
  return best;
}

// The unique length-m sequence shape of a rank-2 Koethe ring:
// (m-2, 1, 2, ..., 2, 1).
inline DimSeq koethe_shape(int m) {
  DimSeq s;
  s.push_back(m - 2);
  s.push_back(1);
  for (int i = 0; i < m - 3; ++i) s.push_back(2);
  s.push_back(1);
  return s;
}

inline bool is_koethe_rank2(const DimSeq& seq) {
  if (seq.size() < 3) return false;
  return seq == koethe_shape(static_cast<int>(seq.size()));
}

// All cyclically valid dimension sequences of length m with entries <= cap,
// one canonical representative per rotation/reversal class, sorted.
//
// Depth-first search over a_1..a_{m-2}; the step m-1 is forced by the exact
// terminal values, and a_m ranges freely before the cyclic filter.  Pruning
// uses two facts provable from the boundary values: the cross-determinant
// x_i*y_{i+1} - x_{i+1}*y_i is identically -1 (so no interior x or y can
// vanish), and running the recurrences backwards from the terminals bounds
// every interior value by a power of cap.
inline std::vector<DimSeq> generate(int m, int cap = 16) {
  if (m < 3) throw sequence_error("generate needs m >= 3");
  if (cap < 1) throw sequence_error("generate needs cap >= 1");

  constexpr long long kSat = 1'000'000'000'000'000LL;
  std::vector<long long> xb(m + 1, 1), yb(m + 1, 1);
  for (int i = m - 1; i >= 1; --i) {
    xb[i] = std::min(kSat, xb[i + 1] * cap);  // x_i <= cap^(m-i)
    yb[i] = (i >= m - 1) ? 1 : std::min(kSat, yb[i + 1] * cap);
  }

  std::set<DimSeq> classes;
  DimSeq a(m, 0);
  std::vector<long long> x(m + 1, 0), y(m + 1, 0);
  x[0] = -1;
  x[1] = 0;
  y[0] = 0;
  y[1] = 1;

  auto finish = [&]() {
    for (int last = 1; last <= cap; ++last) {
      a[m - 1] = last;
      if (validate_cyclic(a)) classes.insert(canonical_class(a));
    }
  };

  auto step = [&](auto&& self, int i) -> void {
    if (i == m - 1) {
      // a_{m-1} is determined by x_m = 1 and y_m = 0.
      const long long xn = 1 + x[m - 2], yn = y[m - 2];
      if (x[m - 1] <= 0 || y[m - 1] <= 0) return;
      if (xn % x[m - 1] != 0) return;
      const long long v = xn / x[m - 1];
      if (v < 1 || v > cap || v * y[m - 1] != yn) return;
      a[m - 2] = static_cast<int>(v);
      x[m] = 1;
      y[m] = 0;
      finish();
      return;
    }
    long long lo = 1, hi = cap;
    if (i > 1) {
      // keep x_{i+1}, y_{i+1} >= 1 and below the backward bounds
      lo = std::max(lo, (x[i - 1] + 1 + x[i] - 1) / x[i]);
      lo = std::max(lo, (y[i - 1] + 1 + y[i] - 1) / y[i]);
      hi = std::min(hi, (xb[i + 1] + x[i - 1]) / x[i]);
      hi = std::min(hi, (yb[i + 1] + y[i - 1]) / y[i]);
    }
    for (long long v = lo; v <= hi; ++v) {
      a[i - 1] = static_cast<int>(v);
      x[i + 1] = v * x[i] - x[i - 1];
      y[i + 1] = v * y[i] - y[i - 1];
      self(self, i + 1);
    }
  };
  step(step, 1);

  return {classes.begin(), classes.end()};
}

// Dimension vectors of the m indecomposables over the rank-2 ring of seq:
// P_0 = (0,1), P_1 = (1, d_0), P_{t+1} = d_t * P_t - P_{t-1}.
inline std::vector<Rank2Pair> indec_dimvectors(const DimSeq& seq) {
  DimSeqWitness w = validate(seq);
  if (!w.valid) throw sequence_error("not a dimension sequence");
  const int m = static_cast<int>(seq.size());
  std::vector<Rank2Pair> p;
  p.emplace_back(0, 1);
  p.emplace_back(1, seq[0]);
  for (int t = 1; t + 1 <= m - 1; ++t)
    p.emplace_back(seq[t] * p[t].first - p[t - 1].first,
                   seq[t] * p[t].second - p[t - 1].second);
  for (const Rank2Pair& q : p)
    if (q.first < 0 || q.second < 0)
      throw sequence_error("negative rank-2 dimension vector");
  const Rank2Pair closure{seq[m - 1] * p[m - 1].first - p[m - 2].first,
                          seq[m - 1] * p[m - 1].second - p[m - 2].second};
  if (closure.first >= 0 && closure.second >= 0)
    throw sequence_error("rank-2 enumeration does not close after m steps");
  return p;
}

}  // namespace koethe
