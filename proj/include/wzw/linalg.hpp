#pragma once

#include <vector>

#include "wzw/sparse_matrix.hpp"

namespace wzw {

struct Echelon {
  SparseMatrix reduced;            // reduced row echelon form
  std::vector<Index> pivot_cols;   // ascending
  Index rank() const { return pivot_cols.size(); }
};

/// Exact Gauss-Jordan elimination. Pivot choice is the first nonzero entry in
/// column order, so identical inputs give identical output.
Echelon reduced_row_echelon(SparseMatrix m);

Index rank(const SparseMatrix& m);

/// Basis of the null space {v : m v = 0}, one vector per free column,
/// ordered by ascending free column index.
std::vector<Vec> kernel_basis(const SparseMatrix& m);

/// Presentation of ambient / span(generators): `projection` maps ambient
/// coordinates to quotient coordinates, `section` picks representatives.
/// projection * section = identity and projection annihilates every generator.
struct QuotientMap {
  Index ambient_dim = 0;
  Index quotient_dim = 0;
  SparseMatrix projection;  // quotient_dim x ambient_dim
  SparseMatrix section;     // ambient_dim x quotient_dim
};

QuotientMap image_quotient(Index ambient_dim, const std::vector<Vec>& generators);

/// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
SparseMatrix inverse(const SparseMatrix& m);

/// Solves a x = b for square nonsingular a (b may have several columns).
SparseMatrix solve(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace wzw
