#include "wzw/sparse_matrix.hpp"

#include <stdexcept>

namespace wzw {

namespace {
const Rational kZero;

void check(bool cond, const char* msg) {
  if (!cond) throw std::out_of_range(msg);
}
}  // namespace

Vec zero_vec(Index n) { return Vec(n); }

Vec unit_vec(Index n, Index i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (Index i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (Index i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<Vec>& rows, Index cols) {
  SparseMatrix m(rows.size(), cols);
  for (Index i = 0; i < rows.size(); ++i)
    for (Index j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) m.data_[i].emplace(j, rows[i][j]);
  return m;
}

SparseMatrix SparseMatrix::from_columns(Index rows, const std::vector<Vec>& cols) {
  SparseMatrix m(rows, cols.size());
  for (Index j = 0; j < cols.size(); ++j)
    for (Index i = 0; i < rows; ++i)
      if (!cols[j][i].is_zero()) m.data_[i].emplace(j, cols[j][i]);
  return m;
}

const Rational& SparseMatrix::at(Index i, Index j) const {
  check(i < rows_ && j < cols_, "SparseMatrix::at: index out of range");
  auto it = data_[i].find(j);
  return it == data_[i].end() ? kZero : it->second;
}

void SparseMatrix::set(Index i, Index j, const Rational& v) {
  check(i < rows_ && j < cols_, "SparseMatrix::set: index out of range");
  if (v.is_zero())
    data_[i].erase(j);
  else
    data_[i][j] = v;
}

void SparseMatrix::add_at(Index i, Index j, const Rational& v) {
  check(i < rows_ && j < cols_, "SparseMatrix::add_at: index out of range");
  auto it = data_[i].find(j);
  if (it == data_[i].end()) {
    if (!v.is_zero()) data_[i].emplace(j, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) data_[i].erase(it);
}

Index SparseMatrix::nnz() const {
  Index n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix m(cols_, rows_);
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) m.data_[j].emplace(i, v);
  return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  check(cols_ == o.rows_, "SparseMatrix::operator*: shape mismatch");
  SparseMatrix m(rows_, o.cols_);
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : o.data_[k]) m.add_at(i, j, a * b);
  return m;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, "SparseMatrix::operator+: shape mismatch");
  SparseMatrix m(*this);
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : o.data_[i]) m.add_at(i, j, v);
  return m;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, "SparseMatrix::operator-: shape mismatch");
  SparseMatrix m(*this);
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : o.data_[i]) m.add_at(i, j, -v);
  return m;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix m(rows_, cols_);
  if (c.is_zero()) return m;
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) m.data_[i].emplace(j, v * c);
  return m;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec SparseMatrix::apply(const Vec& v) const {
  check(v.size() == cols_, "SparseMatrix::apply: size mismatch");
  Vec r(rows_);
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, a] : data_[i]) r[i] += a * v[j];
  return r;
}

Vec SparseMatrix::column(Index j) const {
  check(j < cols_, "SparseMatrix::column: index out of range");
  Vec r(rows_);
  for (Index i = 0; i < rows_; ++i) {
    auto it = data_[i].find(j);
    if (it != data_[i].end()) r[i] = it->second;
  }
  return r;
}

void SparseMatrix::set_column(Index j, const Vec& v) {
  check(j < cols_ && v.size() == rows_, "SparseMatrix::set_column: shape mismatch");
  for (Index i = 0; i < rows_; ++i) set(i, j, v[i]);
}

Rational SparseMatrix::max_abs() const {
  Rational m;
  for (const auto& r : data_)
    for (const auto& [j, v] : r) {
      (void)j;
      Rational a = v.abs();
      if (a > m) m = a;
    }
  return m;
}

void SparseMatrix::swap_rows(Index i, Index j) {
  check(i < rows_ && j < rows_, "SparseMatrix::swap_rows: index out of range");
  data_[i].swap(data_[j]);
}

void SparseMatrix::scale_row(Index i, const Rational& c) {
  check(i < rows_, "SparseMatrix::scale_row: index out of range");
  if (c.is_zero()) {
    data_[i].clear();
    return;
  }
  for (auto& [j, v] : data_[i]) v *= c;
}

void SparseMatrix::axpy_row(Index dst, const Rational& c, Index src) {
  check(dst < rows_ && src < rows_ && dst != src, "SparseMatrix::axpy_row: bad rows");
  if (c.is_zero()) return;
  for (const auto& [j, v] : data_[src]) add_at(dst, j, c * v);
}

}  // namespace wzw
