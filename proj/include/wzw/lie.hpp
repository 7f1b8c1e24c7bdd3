#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wzw/linalg.hpp"
#include "wzw/sparse_matrix.hpp"

namespace wzw::lie {

/// Highest weight in fundamental-weight coordinates.
using Weight = std::vector<long>;

enum class AlgebraName { sl2, sl3, sl4 };

AlgebraName parse_algebra_name(const std::string& s);
std::string to_string(AlgebraName name);

/// Simple Lie algebra sl_n (n = 2, 3, 4) presented by its defining matrices.
/// The invariant form is the trace form of the defining representation, which
/// gives the highest root square length 2.
///
/// Basis layout: h_1..h_{n-1} (simple coroots), then the positive root
/// elements E_{ij}, i < j, in lexicographic order, then their transposes in
/// the same order.
class SimpleLieAlgebra {
public:
  AlgebraName name;
  std::size_t n = 0;     // defining size
  std::size_t dim = 0;   // n^2 - 1
  std::size_t rank_ = 0; // n - 1

  std::vector<SparseMatrix> defining;  // n x n matrix per basis element
  SparseMatrix invariant_form;         // (X_a | X_b) = tr(X_a X_b)
  std::vector<std::pair<Vec, Vec>> dual_pairs;  // (X_a, X^a) coordinate pairs

  std::vector<std::size_t> chevalley_e, chevalley_f, chevalley_h;  // basis indices

  // Cartan elements: the form-dual t_theta of the highest root, and the
  // coroot theta-check. With (theta|theta) = 2 the two coincide.
  Vec highest_root;
  Vec highest_coroot;
  Rational dual_coxeter;

  /// coords of [X_a, X_b]
  const Vec& bracket(std::size_t a, std::size_t b) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Cartan anti-involution (matrix transpose): basis index of omega(X_a).
  std::size_t omega(std::size_t a) const { return omega_[a]; }

  Rational form(const Vec& x, const Vec& y) const;

  /// Decomposition X_b = sum coeff [X_y, X_z], used to reach loop modes
  /// |k| >= 2 from modes of size one.
  struct BracketTerm {
    std::size_t y, z;
    Rational coeff;
  };
  const std::vector<BracketTerm>& bracket_decomposition(std::size_t b) const {
    return bracket_decomp_[b];
  }

  /// Projects an n x n traceless matrix onto basis coordinates.
  Vec coords_of(const SparseMatrix& m) const;
  SparseMatrix matrix_of(const Vec& coords) const;

  // Adjoint action ad(X_a) as a dim x dim matrix on coordinates.
  const SparseMatrix& adjoint(std::size_t a) const { return adjoint_[a]; }

  // filled by build_algebra
  std::vector<std::vector<Vec>> bracket_table_;
  std::vector<std::size_t> omega_;
  std::vector<std::vector<BracketTerm>> bracket_decomp_;
  std::vector<SparseMatrix> adjoint_;
};

SimpleLieAlgebra build_algebra(AlgebraName name);

/// Half the scalar by which the Casimir acts in the adjoint representation.
Rational dual_coxeter_number(const SimpleLieAlgebra& alg);

/// Dual basis pairs (X_a, X^a) with (X_a | X^b) = delta_ab; their tensor sum
/// is the Casimir element.
std::vector<std::pair<Vec, Vec>> casimir_tensor(const SimpleLieAlgebra& alg);

/// <lambda, theta-check>.
long level_of_weight(const SimpleLieAlgebra& alg, const Weight& w);

/// lambda* = -w_0 lambda; coordinate reversal for sl_n.
Weight dualize(const SimpleLieAlgebra& alg, const Weight& w);

/// Dominant weights of level <= ell, in graded lexicographic order.
std::vector<Weight> enumerate_P_ell(const SimpleLieAlgebra& alg, long ell);

/// Root vector for the highest root (E_{1n}); a minimal nilpotent. Its
/// (ell+1)-st power cuts level-ell integrability: e_theta^{m} vanishes on
/// V_lambda exactly when m > <lambda, theta-check>.
Vec highest_root_vector(const SimpleLieAlgebra& alg);

std::string weight_to_string(const Weight& w);

}  // namespace wzw::lie
