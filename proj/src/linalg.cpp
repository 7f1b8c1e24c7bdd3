#include "wzw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wzw {

Echelon reduced_row_echelon(SparseMatrix m) {
  Echelon e;
  const Index rows = m.rows(), cols = m.cols();
  Index pr = 0;  // next pivot row
  for (Index pc = 0; pc < cols && pr < rows; ++pc) {
    Index piv = rows;
    for (Index i = pr; i < rows; ++i) {
      if (!m.at(i, pc).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != pr) m.swap_rows(piv, pr);
    m.scale_row(pr, m.at(pr, pc).reciprocal());
    for (Index i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const Rational& c = m.at(i, pc);
      if (!c.is_zero()) m.axpy_row(i, -c, pr);
    }
    e.pivot_cols.push_back(pc);
    ++pr;
  }
  e.reduced = std::move(m);
  return e;
}

Index rank(const SparseMatrix& m) { return reduced_row_echelon(m).rank(); }

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index p : e.pivot_cols) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = Rational(1);
    for (Index r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -e.reduced.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QuotientMap image_quotient(Index ambient_dim, const std::vector<Vec>& generators) {
  for (const Vec& g : generators)
    if (g.size() != ambient_dim)
      throw std::invalid_argument("image_quotient: generator of wrong length");

  // Row span of the generators in reduced echelon form.
  Echelon e = reduced_row_echelon(SparseMatrix::from_rows(generators, ambient_dim));
  const Index r = e.rank();

  std::vector<bool> is_pivot(ambient_dim, false);
  for (Index p : e.pivot_cols) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  QuotientMap q;
  q.ambient_dim = ambient_dim;
  q.quotient_dim = ambient_dim - r;
  q.projection = SparseMatrix(q.quotient_dim, ambient_dim);
  q.section = SparseMatrix(ambient_dim, q.quotient_dim);
  // Representatives are the free coordinate vectors; a pivot coordinate
  // e_{p_i} is congruent to -sum_j R[i][f_j] e_{f_j} modulo the span.
  for (Index k = 0; k < free_cols.size(); ++k) {
    q.projection.set(k, free_cols[k], Rational(1));
    q.section.set(free_cols[k], k, Rational(1));
    for (Index i = 0; i < r; ++i) {
      const Rational& c = e.reduced.at(i, free_cols[k]);
      if (!c.is_zero()) q.projection.set(k, e.pivot_cols[i], -c);
    }
  }
  return q;
}

SparseMatrix solve(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve: shape mismatch");
  const Index n = a.rows();
  // Eliminate on [a | b].
  SparseMatrix aug(n, n + b.cols());
  for (Index i = 0; i < n; ++i) {
    for (const auto& [j, v] : a.row(i)) aug.set(i, j, v);
    for (const auto& [j, v] : b.row(i)) aug.set(i, n + j, v);
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1)
    throw std::domain_error("solve: singular matrix");
  SparseMatrix x(n, b.cols());
  for (Index i = 0; i < n; ++i)
    for (const auto& [j, v] : e.reduced.row(i))
      if (j >= n) x.set(i, j - n, v);
  return x;
}

SparseMatrix inverse(const SparseMatrix& m) {
  return solve(m, SparseMatrix::identity(m.rows()));
}

}  // namespace wzw
