#include "wzw/kz.hpp"

#include <stdexcept>

namespace wzw::blocks {

KZSystem kz_system(BlockSpace space) {
  if (!space.tensor || space.tensor->slots() == 0)
    throw std::invalid_argument("kz_system: need at least one insertion");
  const TensorSpace& t = *space.tensor;
  const std::size_t n = t.slots();

  KZSystem kz;
  kz.normalization =
      Rational(1) / (Rational(space.level) + space.algebra->dual_coxeter);

  std::vector<std::vector<SparseMatrix>> cpair(n, std::vector<SparseMatrix>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      cpair[i][j] = t.casimir_pair(i, j);
      cpair[j][i] = cpair[i][j];  // c is symmetric
    }

  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix a(t.dim(), t.dim());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational dz = space.insertions[j].point - space.insertions[i].point;
      a = a + cpair[i][j].scaled(dz.reciprocal());
    }
    kz.connection.push_back(a.scaled(kz.normalization));
  }

  // Descent witness. The diagonal part of the kernel is constant in z and
  // each A_i maps it into itself; the nilpotent-power part varies with z, so
  // covariance brings in the derivative of M^{ell+1} along z_i.
  kz.descends = true;
  auto record = [&](const SparseMatrix& residual) {
    Rational mx = residual.max_abs();
    if (mx > kz.descent_residual) kz.descent_residual = mx;
    if (!residual.is_zero()) kz.descends = false;
  };

  const Vec cut = lie::highest_root_vector(*space.algebra);
  SparseMatrix mw = weighted_nilpotent(t, space.insertions, cut);
  SparseMatrix mpow = SparseMatrix::identity(t.dim());
  std::vector<SparseMatrix> powers{mpow};  // M^0 .. M^{ell+1}
  for (long p = 0; p <= space.level; ++p) {
    mpow = mpow * mw;
    powers.push_back(mpow);
  }
  const SparseMatrix& q = space.block_quotient.projection;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < space.algebra->dim; ++b) {
      SparseMatrix diag = t.diagonal_action(unit_vec(space.algebra->dim, b));
      record(q * (kz.connection[i] * diag));
    }
    // d_i M^{ell+1} = sum_m M^m X_(i) M^{ell-m}
    SparseMatrix xi = t.slot_operator(i, t.factor(i).action_of(cut));
    SparseMatrix dpow(t.dim(), t.dim());
    for (long mm = 0; mm <= space.level; ++mm)
      dpow = dpow + powers[static_cast<std::size_t>(mm)] * xi *
                        powers[static_cast<std::size_t>(space.level - mm)];
    record(q * (kz.connection[i] * powers.back() - dpow));
  }
  kz.space = std::move(space);
  return kz;
}

FlatnessReport flatness_check(const KZSystem& kz) {
  const BlockSpace& b = kz.space;
  const TensorSpace& t = *b.tensor;
  const std::size_t n = t.slots();
  if (n < 2) throw std::invalid_argument("flatness_check: need at least two insertions");

  FlatnessReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // d_i A_j: only the term c^{(j,i)}/(z_i - z_j) of A_j involves z_i.
      Rational dij = b.insertions[i].point - b.insertions[j].point;
      SparseMatrix cij = t.casimir_pair(i, j);
      SparseMatrix di_aj =
          cij.scaled(-kz.normalization * (dij * dij).reciprocal());
      Rational dji = b.insertions[j].point - b.insertions[i].point;
      SparseMatrix dj_ai =
          cij.scaled(-kz.normalization * (dji * dji).reciprocal());
      SparseMatrix bracket = kz.connection[i] * kz.connection[j] -
                             kz.connection[j] * kz.connection[i];
      SparseMatrix f = di_aj - dj_ai + bracket;

      Rational mt = f.max_abs();
      if (mt > report.max_tensor_residual) report.max_tensor_residual = mt;

      SparseMatrix descended =
          b.block_quotient.projection * f * b.block_quotient.section;
      Rational mr = descended.max_abs();
      if (mr > report.max_residual) report.max_residual = mr;
      ++report.pairs_checked;
    }
  }
  return report;
}

}  // namespace wzw::blocks
