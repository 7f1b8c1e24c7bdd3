#pragma once

#include <vector>

#include "wzw/lie.hpp"

namespace wzw::lie {

/// Finite-dimensional irreducible representation with an explicit weight
/// basis. Basis vector 0 is the highest weight vector, normalized so that
/// the contravariant form gives it square length 1.
class FiniteIrrep {
public:
  const SimpleLieAlgebra* algebra = nullptr;
  Weight highest_weight;
  std::size_t dimension = 0;
  std::vector<Weight> weights;        // weight of each basis vector
  std::vector<SparseMatrix> action;   // per algebra basis element
  SparseMatrix gram;                  // contravariant form on the basis
  Rational casimir_scalar;            // c(lambda)
  long level = 0;                     // <lambda, theta-check>

  SparseMatrix action_of(const Vec& coords) const;
};

/// Builds the irreducible module by repeated lowering from a formal highest
/// weight vector, resolving dependencies per weight space through the
/// contravariant form.
FiniteIrrep build_irrep(const SimpleLieAlgebra& alg, const Weight& highest);

long level_of(const FiniteIrrep& irrep);

}  // namespace wzw::lie
