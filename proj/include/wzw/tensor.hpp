#pragma once

#include <memory>
#include <vector>

#include "wzw/irrep.hpp"

namespace wzw::blocks {

/// Tensor product of irreps with per-slot operators. Basis indices are
/// mixed-radix, last slot fastest.
class TensorSpace {
public:
  TensorSpace(const lie::SimpleLieAlgebra& alg, std::vector<lie::FiniteIrrep> factors);

  const lie::SimpleLieAlgebra& algebra() const { return *alg_; }
  std::size_t slots() const { return factors_.size(); }
  std::size_t dim() const { return dim_; }
  const lie::FiniteIrrep& factor(std::size_t s) const { return factors_[s]; }

  /// id (x) ... (x) m (x) ... (x) id with m on slot s.
  SparseMatrix slot_operator(std::size_t s, const SparseMatrix& m) const;

  /// Algebra element acting diagonally, sum over slots.
  SparseMatrix diagonal_action(const Vec& coords) const;

  /// c^{(i,j)} = sum_a (X_a on slot i)(X^a on slot j), i != j.
  SparseMatrix casimir_pair(std::size_t i, std::size_t j) const;

private:
  const lie::SimpleLieAlgebra* alg_;
  std::vector<lie::FiniteIrrep> factors_;
  std::vector<std::size_t> stride_;
  std::size_t dim_ = 1;
};

}  // namespace wzw::blocks
