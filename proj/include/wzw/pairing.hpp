#pragma once

#include <vector>

#include "wzw/affine.hpp"

namespace wzw::affine {

/// The g-invariant duality b: V x W -> k for dual irreps, normalized so that
/// the highest weight vector of V pairs to 1 with its counterpart in W.
/// Throws if the labels are not dual to each other.
SparseMatrix invariant_duality(const lie::FiniteIrrep& v, const lie::FiniteIrrep& w);

/// Degree-(d_plus, d_minus) block of the contravariant pairing between a
/// module at label lambda (local parameter t_+) and one at lambda* (t_-).
/// Characterized by b(X t_+^k u, u') + b(u, X t_-^{-k} u') = 0 together with
/// the degree-0 duality; blocks with d_plus != d_minus come out zero.
SparseMatrix contravariant_pairing(const GradedAffineModule& plus,
                                   const GradedAffineModule& minus, int d_plus,
                                   int d_minus);

/// Degree-graded inverse of the contravariant pairing: the gluing tensor of
/// a node. per_degree[d] holds E_d with eps_d = sum_ij E_d[i][j] u_i (x) u'_j.
struct EpsilonTensor {
  lie::Weight label;
  int depth = 0;
  std::vector<SparseMatrix> per_degree;
};

EpsilonTensor epsilon_tensor(const GradedAffineModule& plus,
                             const GradedAffineModule& minus);

/// Residual of the invariance relation
///   (X t_+^k (x) id) eps_{d+k} + (id (x) X t_-^{-k}) eps_d = 0
/// for one (basis element, k, d), k of either sign with d and d+k in the
/// window; exact zero when the tensor is invariant.
SparseMatrix epsilon_invariance_residual(const GradedAffineModule& plus,
                                         const GradedAffineModule& minus,
                                         const EpsilonTensor& eps, std::size_t b,
                                         int k, int d);

}  // namespace wzw::affine
