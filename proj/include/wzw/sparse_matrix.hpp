#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wzw/rational.hpp"

namespace wzw {

using Index = std::size_t;
using Vec = std::vector<Rational>;

Vec zero_vec(Index n);
Vec unit_vec(Index n, Index i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);

/// Sparse matrix over the rationals, stored row-wise. Zero entries are never
/// kept: writes purge them, so iteration only ever sees nonzeros.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(Index n);
  static SparseMatrix from_rows(const std::vector<Vec>& rows, Index cols);
  static SparseMatrix from_columns(Index rows, const std::vector<Vec>& cols);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  const Rational& at(Index i, Index j) const;
  void set(Index i, Index j, const Rational& v);
  void add_at(Index i, Index j, const Rational& v);
  const std::map<Index, Rational>& row(Index i) const { return data_[i]; }

  Index nnz() const;
  bool is_zero() const;

  SparseMatrix transposed() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix operator-() const { return scaled(Rational(-1)); }
  SparseMatrix scaled(const Rational& c) const;
  bool operator==(const SparseMatrix& o) const;
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const;  // matrix * column vector
  Vec column(Index j) const;
  void set_column(Index j, const Vec& v);

  /// Largest absolute value of any entry; 0 for the zero matrix.
  Rational max_abs() const;

  // Row operations used by the elimination routines.
  void swap_rows(Index i, Index j);
  void scale_row(Index i, const Rational& c);
  void axpy_row(Index dst, const Rational& c, Index src);  // row[dst] += c*row[src]

private:
  Index rows_ = 0, cols_ = 0;
  std::vector<std::map<Index, Rational>> data_;
};

}  // namespace wzw
