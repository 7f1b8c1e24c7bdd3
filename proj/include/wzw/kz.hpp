#pragma once

#include <vector>

#include "wzw/blocks.hpp"

namespace wzw::blocks {

/// The KZ connection on the tensor product at a fixed rational configuration:
/// A_i = 1/(ell + h-check) sum_{j != i} c^{(i,j)} / (z_j - z_i).
///
/// The quotiented subspace moves with the points, so the connection descends
/// in the covariant sense: nabla_i = d_i - A_i maps sections of the kernel
/// subsheaf to itself. The exact witness checked here is
///   q A_i g = 0 for the diagonal-action generators g, and
///   q (A_i M^{ell+1} - d_i(M^{ell+1})) = 0 with M = sum_j z_j X_(j).
struct KZSystem {
  BlockSpace space;
  std::vector<SparseMatrix> connection;  // A_i on the tensor product
  Rational normalization;                // 1/(ell + h-check)
  bool descends = false;                 // covariant witness above, exact
  Rational descent_residual;
};

KZSystem kz_system(BlockSpace space);

struct FlatnessReport {
  long pairs_checked = 0;
  /// Largest entry of the descended curvature q F_ij s over all i < j.
  Rational max_residual;
  /// Largest entry of F_ij on the tensor product itself (the KZ form is flat
  /// there outright; kept in the report as the stronger statement).
  Rational max_tensor_residual;
  bool ok() const { return max_residual.is_zero(); }
};

/// Curvature F_ij = d_i A_j - d_j A_i + [A_i, A_j], with the z-derivatives
/// evaluated analytically, descended to the block quotient.
FlatnessReport flatness_check(const KZSystem& kz);

}  // namespace wzw::blocks
