#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "koethe/errors.hpp"
#include "koethe/linalg.hpp"
#include "koethe/quiver.hpp"
#include "koethe/reflect.hpp"

namespace koethe {

// Exact-rational matrix representation of a quiver whose every arrow label
// is trivial.  maps[i] belongs to arrows()[i] and has shape
// dims[target] x dims[source]; matrices act on column vectors.
struct MatrixRep {
  Quiver quiver;
  std::vector<int> dims;      // per vertex, in vertex order
  std::vector<QMatrix> maps;  // per arrow, in arrow order

  DimVector dim_vector() const { return DimVector(dims.begin(), dims.end()); }

  bool is_zero() const {
    for (int d : dims)
      if (d != 0) return false;
    return true;
  }
};

// Per-vertex column bases of subspaces Y_v <= X_v closed under the maps.
struct SubRep {
  std::vector<QMatrix> bases;  // bases[v]: dims[v] x (dim Y_v)
};

namespace detail {

inline void require_trivial_labels(const Quiver& q) {
  for (const Arrow& a : q.arrows())
    if (!a.label.finite || a.label.rdim() != 1 || a.label.ldim() != 1)
      throw rep_error("matrix representations need trivial bimodule labels");
}

}  // namespace detail

inline MatrixRep simple_rep(const Quiver& q, const std::string& k) {
  detail::require_trivial_labels(q);
  MatrixRep r{q, std::vector<int>(q.size(), 0), {}};
  r.dims[q.index(k)] = 1;
  for (const Arrow& a : q.arrows())
    r.maps.emplace_back(r.dims[q.index(a.target)], r.dims[q.index(a.source)]);
  return r;
}

// Reflection functor at a sink k: the new space at k is the kernel of the
// combined map  (+) over arrows i -> k of X_i  -->  X_k, and the new maps
// out of k are the block rows of that kernel basis.
inline MatrixRep reflect_rep_sink(const MatrixRep& r, const std::string& k) {
  const Quiver& q = r.quiver;
  if (!q.is_sink(k)) throw reflect_error("vertex '" + k + "' is not a sink");
  const int ki = q.index(k);

  std::vector<int> incoming;  // arrow indices, in arrow order
  int total = 0;
  for (std::size_t i = 0; i < q.arrows().size(); ++i)
    if (q.arrows()[i].target == k) {
      incoming.push_back(static_cast<int>(i));
      total += r.dims[q.index(q.arrows()[i].source)];
    }
  QMatrix stacked(r.dims[ki], total);
  int off = 0;
  for (int ai : incoming) {
    const QMatrix& phi = r.maps[static_cast<std::size_t>(ai)];
    for (int rr = 0; rr < phi.rows; ++rr)
      for (int cc = 0; cc < phi.cols; ++cc)
        stacked.at(rr, off + cc) = phi.at(rr, cc);
    off += phi.cols;
  }
  const QMatrix kernel = kernel_basis(stacked);

  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    arrows.push_back(a.target == k ? Arrow{k, a.source, a.label.dual()} : a);
  MatrixRep out{Quiver(q.mode(), q.vertices(), arrows), r.dims, {}};
  out.dims[ki] = kernel.cols;

  off = 0;
  std::vector<QMatrix> new_at(q.arrows().size());
  for (int ai : incoming) {
    const int di = r.dims[q.index(q.arrows()[static_cast<std::size_t>(ai)].source)];
    QMatrix block(di, kernel.cols);
    for (int rr = 0; rr < di; ++rr)
      for (int cc = 0; cc < kernel.cols; ++cc)
        block.at(rr, cc) = kernel.at(off + rr, cc);
    new_at[static_cast<std::size_t>(ai)] = block;
    off += di;
  }
  for (std::size_t i = 0; i < q.arrows().size(); ++i)
    out.maps.push_back(q.arrows()[i].target == k ? new_at[i] : r.maps[i]);
  return out;
}

// Reflection functor at a source k: the new space at k is the cokernel of
// X_k --> (+) over arrows k -> j of X_j; its quotient map, restricted to
// each X_j block, gives the new maps into k.
inline MatrixRep reflect_rep_source(const MatrixRep& r, const std::string& k) {
  const Quiver& q = r.quiver;
  if (!q.is_source(k)) throw reflect_error("vertex '" + k + "' is not a source");
  const int ki = q.index(k);

  std::vector<int> outgoing;
  int total = 0;
  for (std::size_t i = 0; i < q.arrows().size(); ++i)
    if (q.arrows()[i].source == k) {
      outgoing.push_back(static_cast<int>(i));
      total += r.dims[q.index(q.arrows()[i].target)];
    }
  QMatrix stacked(total, r.dims[ki]);
  int off = 0;
  for (int ai : outgoing) {
    const QMatrix& phi = r.maps[static_cast<std::size_t>(ai)];
    for (int rr = 0; rr < phi.rows; ++rr)
      for (int cc = 0; cc < phi.cols; ++cc)
        stacked.at(off + rr, cc) = phi.at(rr, cc);
    off += phi.rows;
  }
  const QMatrix quotient = left_null_basis(stacked);  // q x total

  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    arrows.push_back(a.source == k ? Arrow{a.target, k, a.label.shifted(-1)}
                                   : a);
  MatrixRep out{Quiver(q.mode(), q.vertices(), arrows), r.dims, {}};
  out.dims[ki] = quotient.rows;

  off = 0;
  std::vector<QMatrix> new_at(q.arrows().size());
  for (int ai : outgoing) {
    const int dj = r.dims[q.index(q.arrows()[static_cast<std::size_t>(ai)].target)];
    QMatrix block(quotient.rows, dj);
    for (int rr = 0; rr < quotient.rows; ++rr)
      for (int cc = 0; cc < dj; ++cc)
        block.at(rr, cc) = quotient.at(rr, off + cc);
    new_at[static_cast<std::size_t>(ai)] = block;
    off += dj;
  }
  for (std::size_t i = 0; i < q.arrows().size(); ++i)
    out.maps.push_back(q.arrows()[i].source == k ? new_at[i] : r.maps[i]);
  return out;
}

// Basis of the sum of incoming images at vertex v; no columns at sources.
inline QMatrix incoming_image_basis(const MatrixRep& r, int v) {
  const Quiver& q = r.quiver;
  QMatrix span(r.dims[static_cast<std::size_t>(v)], 0);
  for (std::size_t i = 0; i < q.arrows().size(); ++i)
    if (q.index(q.arrows()[i].target) == v)
      span = hstack(span, r.maps[i]);
  QMatrix reduced = transpose(span);
  rref(reduced);
  QMatrix basis = transpose(reduced);
  // drop zero columns left behind by the row reduction
  int nz = 0;
  for (int c = 0; c < basis.cols; ++c) {
    bool zero = true;
    for (int rr = 0; rr < basis.rows; ++rr)
      if (!is_zero(basis.at(rr, c))) zero = false;
    if (!zero) ++nz;
  }
  QMatrix out(basis.rows, nz);
  int oc = 0;
  for (int c = 0; c < basis.cols; ++c) {
    bool zero = true;
    for (int rr = 0; rr < basis.rows; ++rr)
      if (!is_zero(basis.at(rr, c))) zero = false;
    if (zero) continue;
    for (int rr = 0; rr < basis.rows; ++rr) out.at(rr, oc) = basis.at(rr, c);
    ++oc;
  }
  return out;
}

// The radical: at each non-source vertex the sum of the incoming images,
// zero at sources.
inline SubRep radical(const MatrixRep& r) {
  SubRep y;
  for (int v = 0; v < r.quiver.size(); ++v) {
    if (r.quiver.is_source(r.quiver.vertices()[static_cast<std::size_t>(v)]))
      y.bases.emplace_back(r.dims[static_cast<std::size_t>(v)], 0);
    else
      y.bases.push_back(incoming_image_basis(r, v));
  }
  return y;
}

inline DimVector top_dims(const MatrixRep& r) {
  SubRep rad = radical(r);
  DimVector t(r.quiver.size());
  for (int v = 0; v < r.quiver.size(); ++v)
    t[static_cast<std::size_t>(v)] =
        r.dims[static_cast<std::size_t>(v)] - rad.bases[static_cast<std::size_t>(v)].cols;
  return t;
}

inline bool is_multiplicity_free_top(const MatrixRep& r) {
  for (long long t : top_dims(r))
    if (t > 1) return false;
  return true;
}

// Smallness test: zero at every source and contained in the incoming images
// everywhere else.  The subrepresentation data itself is checked first.
inline bool is_small_subrep(const MatrixRep& r, const SubRep& y) {
  const Quiver& q = r.quiver;
  if (static_cast<int>(y.bases.size()) != q.size())
    throw rep_error("subrepresentation has wrong number of vertex spaces");
  for (int v = 0; v < q.size(); ++v) {
    const QMatrix& b = y.bases[static_cast<std::size_t>(v)];
    if (b.rows != r.dims[static_cast<std::size_t>(v)])
      throw rep_error("subrepresentation basis has wrong height at '" +
                      q.vertices()[static_cast<std::size_t>(v)] + "'");
    if (rank(b) != b.cols)
      throw rep_error("subrepresentation basis columns are dependent");
  }
  for (std::size_t i = 0; i < q.arrows().size(); ++i) {
    const int s = q.index(q.arrows()[i].source), t = q.index(q.arrows()[i].target);
    if (!columns_contained(matmul(r.maps[i], y.bases[static_cast<std::size_t>(s)]),
                           y.bases[static_cast<std::size_t>(t)]))
      throw rep_error("subspaces are not closed under the arrow maps");
  }
  for (int v = 0; v < q.size(); ++v) {
    const std::string& name = q.vertices()[static_cast<std::size_t>(v)];
    const QMatrix& b = y.bases[static_cast<std::size_t>(v)];
    if (q.is_source(name)) {
      if (b.cols != 0) return false;
    } else {
      if (!columns_contained(b, incoming_image_basis(r, v))) return false;
    }
  }
  return true;
}

// Conical test on an arm: walking the arm towards its distinguished end k
// (the last vertex of the path), arrows pointing at k must be injective and
// the remaining arm arrows surjective.
inline bool is_conical_on_arm(const MatrixRep& r,
                              const std::vector<std::string>& arm) {
  const Quiver& q = r.quiver;
  if (arm.size() < 2) throw rep_error("arm needs at least two vertices");
  std::set<std::string> in_arm(arm.begin(), arm.end());
  if (in_arm.size() != arm.size()) throw rep_error("arm repeats a vertex");
  for (const std::string& v : arm) q.index(v);
  // interior arm vertices may not touch anything outside the arm
  for (const Arrow& a : q.arrows()) {
    const bool s_in = in_arm.count(a.source), t_in = in_arm.count(a.target);
    if (s_in != t_in) {
      const std::string& inside = s_in ? a.source : a.target;
      if (inside != arm.back())
        throw rep_error("arm vertex '" + inside + "' touches the outside");
    }
  }
  auto arrow_between = [&](const std::string& u, const std::string& w) {
    for (std::size_t i = 0; i < q.arrows().size(); ++i)
      if ((q.arrows()[i].source == u && q.arrows()[i].target == w) ||
          (q.arrows()[i].source == w && q.arrows()[i].target == u))
        return static_cast<int>(i);
    throw rep_error("arm vertices '" + u + "' and '" + w + "' not adjacent");
  };
  for (std::size_t i = 0; i + 1 < arm.size(); ++i) {
    const int ai = arrow_between(arm[i], arm[i + 1]);
    const Arrow& a = q.arrows()[static_cast<std::size_t>(ai)];
    const QMatrix& phi = r.maps[static_cast<std::size_t>(ai)];
    const bool points_to_end = (a.target == arm[i + 1]);
    if (points_to_end) {
      if (rank(phi) != r.dims[static_cast<std::size_t>(q.index(a.source))])
        return false;
    } else {
      if (rank(phi) != r.dims[static_cast<std::size_t>(q.index(a.target))])
        return false;
    }
  }
  return true;
}

namespace detail {

inline void require_simply_laced(const Quiver& q) {
  switch (classify(q).kind) {
    case DiagramKind::A:
    case DiagramKind::D:
    case DiagramKind::E6:
    case DiagramKind::E7:
    case DiagramKind::E8:
      break;
    default:
      throw rep_error("matrix enumeration needs a simply-laced diagram");
  }
  require_trivial_labels(q);
}

// Walks the (t, sink) seeds of the tower, building the matrix image of each
// seed by inverse reflection functors.  Seeds whose dimension vector leaves
// the positive cone, and repeats of an already produced vector, are skipped
// before any matrix work.  Returns early once the visitor returns false.
template <typename Visit>
inline void scan_indec_reps(const Quiver& q, int cap, Visit visit) {
  require_simply_laced(q);
  RepFiniteness rf = representation_finiteness(q, cap);
  CoxeterTower tower(q);
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
      if (!nonneg || total == 0 || !seen.insert(x).second) continue;
      MatrixRep r = simple_rep(tower.state(t).quiver, v);
      for (int j = t; j >= 1; --j)
        r = reflect_rep_source(r, tower.reflected_vertex(j - 1));
      if (r.is_zero()) continue;
      if (!visit(r, t, v)) return;
    }
  }
}

}  // namespace detail

// All indecomposable representations, one per dimension vector, ordered by
// the (t, sink) seed that produced them.
inline std::vector<MatrixRep> enumerate_indec_reps(const Quiver& q,
                                                   int cap = 10000) {
  std::vector<MatrixRep> out;
  detail::scan_indec_reps(q, cap,
                          [&](const MatrixRep& r, int, const std::string&) {
                            out.push_back(r);
                            return true;
                          });
  return out;
}

struct TopViolation {
  MatrixRep rep;
  std::string vertex;     // where the top has multiplicity >= 2
  long long multiplicity;
};

// First enumerated indecomposable whose top is not multiplicity-free, if
// any; the brute-force side of the Koethe cross-check.
inline std::optional<TopViolation> find_top_violation(const Quiver& q,
                                                      int cap = 10000) {
  std::optional<TopViolation> found;
  detail::scan_indec_reps(q, cap,
                          [&](const MatrixRep& r, int, const std::string&) {
                            DimVector t = top_dims(r);
                            for (int v = 0; v < r.quiver.size(); ++v)
                              if (t[static_cast<std::size_t>(v)] > 1) {
                                found = TopViolation{
                                    r,
                                    r.quiver.vertices()[static_cast<std::size_t>(v)],
                                    t[static_cast<std::size_t>(v)]};
                                return false;
                              }
                            return true;
                          });
  return found;
}

}  // namespace koethe
