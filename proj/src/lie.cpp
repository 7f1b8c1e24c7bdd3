#include "wzw/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace wzw::lie {

namespace {

SparseMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  SparseMatrix m(n, n);
  m.set(i, j, Rational(1));
  return m;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  return a * b - b * a;
}

Rational trace_product(const SparseMatrix& a, const SparseMatrix& b) {
  Rational t;
  for (Index i = 0; i < a.rows(); ++i)
    for (const auto& [k, v] : a.row(i)) t += v * b.at(k, i);
  return t;
}

}  // namespace

AlgebraName parse_algebra_name(const std::string& s) {
  if (s == "sl2") return AlgebraName::sl2;
  if (s == "sl3") return AlgebraName::sl3;
  if (s == "sl4") return AlgebraName::sl4;
  throw std::invalid_argument("unsupported algebra '" + s + "' (expected sl2, sl3 or sl4)");
}

std::string to_string(AlgebraName name) {
  switch (name) {
    case AlgebraName::sl2: return "sl2";
    case AlgebraName::sl3: return "sl3";
    case AlgebraName::sl4: return "sl4";
  }
  return "?";
}

Vec SimpleLieAlgebra::coords_of(const SparseMatrix& m) const {
  Vec c(dim);
  // Cartan part: partial sums of the diagonal.
  Rational partial;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    partial += m.at(i, i);
    c[i] = partial;
  }
  std::size_t idx = rank_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c[idx++] = m.at(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c[idx++] = m.at(j, i);
  return c;
}

SparseMatrix SimpleLieAlgebra::matrix_of(const Vec& coords) const {
  SparseMatrix m(n, n);
  for (std::size_t a = 0; a < dim; ++a) {
    if (coords[a].is_zero()) continue;
    for (Index i = 0; i < n; ++i)
      for (const auto& [j, v] : defining[a].row(i)) m.add_at(i, j, coords[a] * v);
  }
  return m;
}

const Vec& SimpleLieAlgebra::bracket(std::size_t a, std::size_t b) const {
  return bracket_table_[a][b];
}

Vec SimpleLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      const Vec& br = bracket_table_[a][b];
      Rational c = x[a] * y[b];
      for (std::size_t k = 0; k < dim; ++k) r[k] += c * br[k];
    }
  }
  return r;
}

Rational SimpleLieAlgebra::form(const Vec& x, const Vec& y) const {
  Rational s;
  for (Index a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (const auto& [b, g] : invariant_form.row(a)) s += x[a] * g * y[b];
  }
  return s;
}

SimpleLieAlgebra build_algebra(AlgebraName name) {
  SimpleLieAlgebra alg;
  alg.name = name;
  switch (name) {
    case AlgebraName::sl2: alg.n = 2; break;
    case AlgebraName::sl3: alg.n = 3; break;
    case AlgebraName::sl4: alg.n = 4; break;
  }
  const std::size_t n = alg.n;
  alg.rank_ = n - 1;
  alg.dim = n * n - 1;

  // Defining matrices: h_i, then E_{ij} (i<j), then E_{ji}.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    SparseMatrix h(n, n);
    h.set(i, i, Rational(1));
    h.set(i + 1, i + 1, Rational(-1));
    alg.defining.push_back(std::move(h));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pos.emplace_back(i, j);
  for (auto [i, j] : pos) alg.defining.push_back(elementary(n, i, j));
  for (auto [i, j] : pos) alg.defining.push_back(elementary(n, j, i));

  const std::size_t dim = alg.dim;
  const std::size_t npos = pos.size();

  // Cartan anti-involution = matrix transpose, a basis permutation.
  alg.omega_.resize(dim);
  for (std::size_t i = 0; i < alg.rank_; ++i) alg.omega_[i] = i;
  for (std::size_t m = 0; m < npos; ++m) {
    alg.omega_[alg.rank_ + m] = alg.rank_ + npos + m;
    alg.omega_[alg.rank_ + npos + m] = alg.rank_ + m;
  }

  // Chevalley generators.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    alg.chevalley_h.push_back(i);
    for (std::size_t m = 0; m < npos; ++m) {
      if (pos[m] == std::make_pair(i, i + 1)) {
        alg.chevalley_e.push_back(alg.rank_ + m);
        alg.chevalley_f.push_back(alg.rank_ + npos + m);
      }
    }
  }

  // Structure constants.
  alg.bracket_table_.assign(dim, std::vector<Vec>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      alg.bracket_table_[a][b] = alg.coords_of(commutator(alg.defining[a], alg.defining[b]));

  // Adjoint matrices.
  for (std::size_t a = 0; a < dim; ++a) {
    SparseMatrix ad(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) ad.set_column(b, alg.bracket_table_[a][b]);
    alg.adjoint_.push_back(std::move(ad));
  }

  // Invariant form (trace form of the defining representation).
  alg.invariant_form = SparseMatrix(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      alg.invariant_form.set(a, b, trace_product(alg.defining[a], alg.defining[b]));

  // Dual pairs from the inverse Gram matrix: X^a = sum_b (G^-1)_{ba} X_b.
  SparseMatrix gram_inv = inverse(alg.invariant_form);
  for (std::size_t a = 0; a < dim; ++a)
    alg.dual_pairs.emplace_back(unit_vec(dim, a), gram_inv.column(a));

  // Highest root as a Cartan element through the form: theta = eps_1 - eps_n
  // corresponds to t_theta = diag(1,0,...,0,-1), which for the normalized
  // trace form coincides with the coroot theta-check.
  {
    SparseMatrix cor(n, n);
    cor.set(0, 0, Rational(1));
    cor.set(n - 1, n - 1, Rational(-1));
    alg.highest_root = alg.coords_of(cor);
    alg.highest_coroot = alg.highest_root;
  }

  // Dual Coxeter number: sum_a ad(X_a) ad(X^a) = 2 h-check on the adjoint rep.
  {
    SparseMatrix cas(dim, dim);
    for (const auto& [x, y] : alg.dual_pairs) {
      SparseMatrix adx(dim, dim), ady(dim, dim);
      for (std::size_t a = 0; a < dim; ++a) {
        if (!x[a].is_zero()) adx = adx + alg.adjoint_[a].scaled(x[a]);
        if (!y[a].is_zero()) ady = ady + alg.adjoint_[a].scaled(y[a]);
      }
      cas = cas + adx * ady;
    }
    Rational scalar = cas.at(0, 0);
    if (cas != SparseMatrix::identity(dim).scaled(scalar))
      throw std::logic_error("build_algebra: adjoint Casimir is not scalar");
    alg.dual_coxeter = scalar / Rational(2);
  }

  // Bracket decompositions: each basis element as a sum of brackets of basis
  // elements. h_i = [e_i, f_i]; E_{ij} peels one step off the index distance.
  alg.bracket_decomp_.assign(dim, {});
  auto pos_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t m = 0; m < npos; ++m)
      if (pos[m] == std::make_pair(i, j)) return alg.rank_ + m;
    throw std::logic_error("build_algebra: bad root index");
  };
  for (std::size_t i = 0; i + 1 < n; ++i)
    alg.bracket_decomp_[i].push_back({alg.chevalley_e[i], alg.chevalley_f[i], Rational(1)});
  for (std::size_t m = 0; m < npos; ++m) {
    auto [i, j] = pos[m];
    std::size_t up = alg.rank_ + m;        // E_{ij}, i < j
    std::size_t dn = alg.rank_ + npos + m; // E_{ji}
    if (j == i + 1) {
      // [h_i, e_i] = 2 e_i and [h_i, f_i] = -2 f_i.
      alg.bracket_decomp_[up].push_back({i, up, Rational(1, 2)});
      alg.bracket_decomp_[dn].push_back({dn, i, Rational(1, 2)});
    } else {
      // E_{ij} = [E_{i,j-1}, E_{j-1,j}], E_{ji} = [E_{j,j-1}, E_{j-1,i}].
      alg.bracket_decomp_[up].push_back({pos_index(i, j - 1), alg.chevalley_e[j - 1], Rational(1)});
      alg.bracket_decomp_[dn].push_back({alg.chevalley_f[j - 1], pos_index(i, j - 1) + npos, Rational(1)});
    }
  }

  return alg;
}

Rational dual_coxeter_number(const SimpleLieAlgebra& alg) { return alg.dual_coxeter; }

std::vector<std::pair<Vec, Vec>> casimir_tensor(const SimpleLieAlgebra& alg) {
  return alg.dual_pairs;
}

long level_of_weight(const SimpleLieAlgebra& alg, const Weight& w) {
  if (w.size() != alg.rank_)
    throw std::invalid_argument("weight has wrong number of coordinates");
  // <lambda, theta-check> = sum of the fundamental coordinates for sl_n.
  long s = 0;
  for (long c : w) s += c;
  return s;
}

Weight dualize(const SimpleLieAlgebra& alg, const Weight& w) {
  if (w.size() != alg.rank_)
    throw std::invalid_argument("weight has wrong number of coordinates");
  return Weight(w.rbegin(), w.rend());
}

std::vector<Weight> enumerate_P_ell(const SimpleLieAlgebra& alg, long ell) {
  if (ell < 0) throw std::invalid_argument("enumerate_P_ell: negative level");
  std::vector<Weight> out;
  Weight w(alg.rank_, 0);
  // Graded lexicographic enumeration of tuples with coordinate sum <= ell.
  for (long total = 0; total <= ell; ++total) {
    std::vector<Weight> level_set;
    auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
      if (pos + 1 == w.size()) {
        w[pos] = remaining;
        level_set.push_back(w);
        return;
      }
      for (long c = 0; c <= remaining; ++c) {
        w[pos] = c;
        self(self, pos + 1, remaining - c);
      }
    };
    if (w.empty()) break;
    rec(rec, 0, total);
    std::sort(level_set.begin(), level_set.end());
    out.insert(out.end(), level_set.begin(), level_set.end());
  }
  return out;
}

Vec highest_root_vector(const SimpleLieAlgebra& alg) {
  SparseMatrix e(alg.n, alg.n);
  e.set(0, alg.n - 1, Rational(1));
  return alg.coords_of(e);
}

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace wzw::lie
