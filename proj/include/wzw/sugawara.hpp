#pragma once

#include <optional>
#include <vector>

#include "wzw/affine.hpp"

namespace wzw::affine {

/// Normal-ordered Sugawara operator T(D_k) on a truncated module, as one
/// matrix per source degree d (target degree d - k). Only finitely many
/// normal-ordered terms act within the window; the discarded ones vanish on
/// in-window sources by degree accounting, so each stored matrix is exact.
struct SugawaraOperator {
  const GradedAffineModule* module = nullptr;
  int mode = 0;  // k
  std::vector<std::optional<SparseMatrix>> per_degree;  // by source degree

  bool defined(int d) const {
    return d >= 0 && d < static_cast<int>(per_degree.size()) &&
           per_degree[static_cast<std::size_t>(d)].has_value();
  }
  const SparseMatrix& at(int d) const { return *per_degree.at(static_cast<std::size_t>(d)); }
};

SugawaraOperator sugawara(const GradedAffineModule& m, int k);

/// Central scalar of the Virasoro relation: 1 in oscillator mode,
/// ell dim(g) / (ell + h-check) in affine mode.
Rational virasoro_central_scalar(const GradedAffineModule& m);

struct VirasoroFailure {
  int k, l, degree;
  Rational residual;
};

struct VirasoroReport {
  int max_mode = 0;
  int window = 0;
  long triples_checked = 0;
  Rational max_residual;  // zero iff all identities hold
  std::vector<VirasoroFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks [T(D_k), T(D_l)] = (l-k) T(D_{k+l}) + delta_{k+l,0} (k^3-k)/12 Z id
/// for all |k|,|l| <= max_mode on every in-window degree.
VirasoroReport virasoro_check(const GradedAffineModule& m, int max_mode, int window);

struct DerivationReport {
  long checked = 0;
  Rational max_residual;
  bool ok() const { return max_residual.is_zero(); }
};

/// Checks [T(D_k), X t^f] = f (X t^{k+f}) for |k| <= max_mode and
/// |f| <= max_exponent on every in-window degree.
DerivationReport derivation_property_check(const GradedAffineModule& m, int max_mode,
                                           int max_exponent);

}  // namespace wzw::affine
