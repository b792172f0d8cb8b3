#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "koethe/errors.hpp"
#include "koethe/quiver.hpp"
#include "koethe/reflect.hpp"

namespace koethe {

using Rational = boost::rational<long long>;

// Minimal positive integers f_i with d_ij * f_j = d_ji * f_i across every
// arrow i -> j, where (d_ij, d_ji) are the arrow's (right, left) dimensions
// at its current offset.  Reduced so the componentwise gcd is 1.
inline std::vector<long long> symmetrizer(const Quiver& q) {
  const int n = q.size();
  std::vector<Rational> f(n, Rational(0));
  std::vector<int> order;  // BFS over the underlying graph
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  for (const Arrow& a : q.arrows()) {
    const int i = q.index(a.source), j = q.index(a.target);
    const Rational ratio(a.label.ldim(), a.label.rdim());  // f_j / f_i
    adj[i].push_back({j, ratio});
    adj[j].push_back({i, Rational(1) / ratio});
  }
  for (int start = 0; start < n; ++start) {
    if (f[start].numerator() != 0) continue;
    f[start] = 1;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (const auto& [w, ratio] : adj[v]) {
        const Rational fw = f[v] * ratio;
        if (f[w].numerator() == 0) {
          f[w] = fw;
          queue.push_back(w);
        } else if (f[w] != fw) {
          throw form_error("quiver is not symmetrizable");
        }
      }
    }
  }
  long long lcm = 1;
  for (const Rational& r : f) lcm = std::lcm(lcm, r.denominator());
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = (f[i] * lcm).numerator();
  long long g = 0;
  for (long long v : out) g = std::gcd(g, v);
  for (long long& v : out) v /= g;
  return out;
}

// The symmetrized bilinear form
//   B(x, y) = sum_i f_i x_i y_i - 1/2 sum d_ij f_j x_i y_j,
// the adjacency sum running over both ordered directions of every arrow.
inline Rational bilinear(const Quiver& q, const std::vector<long long>& f,
                         const DimVector& x, const DimVector& y) {
  Rational b(0);
  for (int i = 0; i < q.size(); ++i) b += Rational(f[i]) * x[i] * y[i];
  for (const Arrow& a : q.arrows()) {
    const int i = q.index(a.source), j = q.index(a.target);
    b -= Rational(a.label.rdim() * f[j], 2) * x[i] * y[j];
    b -= Rational(a.label.ldim() * f[i], 2) * x[j] * y[i];
  }
  return b;
}

// Weyl reflection s_k(x) = x - (2 B(x, e_k) / B(e_k, e_k)) e_k.  For a
// loop-free vertex this is y_k = -x_k + sum over neighbours i of d_ik x_i,
// the same involution the sink reflections use.
inline DimVector weyl_reflect(const Quiver& q, const std::vector<long long>& f,
                              const std::string& k, const DimVector& x) {
  const int ki = q.index(k);
  DimVector ek(q.size(), 0);
  ek[ki] = 1;
  const Rational bkk = bilinear(q, f, ek, ek);
  if (bkk.numerator() == 0)
    throw form_error("degenerate vertex '" + k + "': B(e_k, e_k) = 0");
  const Rational coeff = Rational(2) * bilinear(q, f, x, ek) / bkk;
  if (coeff.denominator() != 1)
    throw form_error("non-integral reflection at '" + k + "'");
  DimVector y = x;
  y[ki] -= coeff.numerator();
  return y;
}

// Positive roots by orbit closure: start from the unit vectors and apply
// all simple reflections, keeping componentwise-nonnegative images, until
// nothing new appears.  Defined for the diagrams with positive definite
// form; elsewhere the orbit would not close and the cap reports it.
inline std::vector<DimVector> positive_roots(const Quiver& q, int cap = 10000) {
  const DiagramType t = classify(q);
  switch (t.kind) {
    case DiagramKind::A:
    case DiagramKind::B:
    case DiagramKind::D:
    case DiagramKind::E6:
    case DiagramKind::E7:
    case DiagramKind::E8:
    case DiagramKind::F4:
    case DiagramKind::G2:
      break;
    default:
      throw form_error("positive roots need a Dynkin diagram, got " +
                       t.name());
  }
  const std::vector<long long> f = symmetrizer(q);
  std::set<DimVector> roots;
  std::vector<DimVector> frontier;
  for (const std::string& v : q.vertices()) {
    DimVector e = unit_vector(q, v);
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<DimVector> next;
    for (const DimVector& x : frontier) {
      for (const std::string& k : q.vertices()) {
        DimVector y = weyl_reflect(q, f, k, x);
        if (std::any_of(y.begin(), y.end(), [](long long c) { return c < 0; }))
          continue;
        if (roots.insert(y).second) next.push_back(y);
      }
    }
    if (static_cast<int>(roots.size()) > cap)
      throw form_error("root orbit did not close within " +
                       std::to_string(cap) + " vectors; form not definite");
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

enum class ClosedFormType { A, B, C, D };

// The explicit positive-root lists for the classical series under the
// canonical labelling (vertices 1..n along the path; for D the vertex n
// hangs off n-2).  Root coordinates are simple-root coefficients.
inline std::vector<DimVector> closed_form_roots(ClosedFormType type, int n) {
  if (n < 1 || n > 9)
    throw form_error("closed-form lists are provided for 1 <= n <= 9");
  std::set<DimVector> out;
  auto interval = [&](int lo, int hi, int coeff = 1) {  // 1-based, inclusive
    DimVector v(n, 0);
    for (int k = lo; k <= hi; ++k) v[k - 1] = coeff;
    return v;
  };
  auto plus = [&](DimVector a, const DimVector& b) {
    for (int i = 0; i < n; ++i) a[i] += b[i];
    return a;
  };
  switch (type) {
    case ClosedFormType::A:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.insert(interval(i, j));
      break;
    case ClosedFormType::B:
      if (n < 2) throw form_error("B needs n >= 2");
      for (int i = 1; i <= n; ++i) out.insert(interval(i, n));
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          out.insert(interval(i, j - 1));
          out.insert(plus(interval(i, j - 1), interval(j, n, 2)));
        }
      break;
    case ClosedFormType::C:
      if (n < 2) throw form_error("C needs n >= 2");
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.insert(interval(i, j - 1));
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          DimVector v = interval(i, j - 1);
          v = plus(v, interval(j, n - 1, 2));
          v[n - 1] += 1;
          out.insert(v);
        }
      break;
    case ClosedFormType::D: {
      if (n < 4) throw form_error("D needs n >= 4");
      for (int i = 1; i <= n - 1; ++i)
        for (int k = i; k <= n - 1; ++k) out.insert(interval(i, k));
      for (int i = 1; i <= n - 3; ++i)
        for (int k = i; k <= n - 3; ++k) {
          DimVector v = plus(interval(i, k), interval(k + 1, n - 2, 2));
          v[n - 2] += 1;
          v[n - 1] += 1;
          out.insert(v);
        }
      for (int i = 1; i <= n - 1; ++i) {
        DimVector v = interval(i, n - 2);  // empty when i = n-1
        v[n - 1] += 1;
        out.insert(v);
      }
      for (int i = 1; i <= n - 2; ++i) {
        DimVector v = interval(i, n - 2);
        v[n - 2] += 1;
        v[n - 1] += 1;
        out.insert(v);
      }
      break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace koethe
