#pragma once

#include <boost/rational.hpp>

#include <vector>

#include "koethe/errors.hpp"

namespace koethe {

using Rational = boost::rational<long long>;

// Mixed-type comparisons like `r == 0` recurse forever in this Boost
// release; compare through the numerator instead.
inline bool is_zero(const Rational& r) { return r.numerator() == 0; }

// Dense rational matrix, row major.  Kernel and image bases come out of
// reduced row echelon form, so equal subspaces get equal bases.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

inline QMatrix matmul(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw rep_error("matrix shape mismatch in product");
  QMatrix z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& v = x.at(r, k);
      if (is_zero(v)) continue;
      for (int c = 0; c < y.cols; ++c) z.at(r, c) += v * y.at(k, c);
    }
  return z;
}

// Columns of x followed by columns of y.
inline QMatrix hstack(const QMatrix& x, const QMatrix& y) {
  if (x.rows != y.rows) throw rep_error("matrix shape mismatch in hstack");
  QMatrix z(x.rows, x.cols + y.cols);
  for (int r = 0; r < x.rows; ++r) {
    for (int c = 0; c < x.cols; ++c) z.at(r, c) = x.at(r, c);
    for (int c = 0; c < y.cols; ++c) z.at(r, x.cols + c) = y.at(r, c);
  }
  return z;
}

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (!is_zero(m.at(r, col))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    const Rational inv = Rational(1) / m.at(row, col);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || is_zero(m.at(r, col))) continue;
      const Rational factor = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

// Columns form the canonical basis of the null space of m.
inline QMatrix kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMatrix k(m.cols, m.cols - static_cast<int>(pivots.size()));
  int out = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    k.at(free, out) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k.at(pivots[i], out) = -r.at(static_cast<int>(i), free);
    ++out;
  }
  return k;
}

// Rows form a basis of { p : p * m = 0 }.
inline QMatrix left_null_basis(const QMatrix& m) {
  return transpose(kernel_basis(transpose(m)));
}

// Span comparison without choosing bases: is col(x) contained in col(y)?
inline bool columns_contained(const QMatrix& x, const QMatrix& y) {
  if (x.cols == 0) return true;
  return rank(hstack(y, x)) == rank(y);
}

}  // namespace koethe
