#pragma once

#include "wzw/affine.hpp"
#include "wzw/pairing.hpp"

namespace wzw::fusion {

/// Monodromy of the connection around a node degeneration in the channel
/// labelled by lambda: multiplication by e^{i pi r} with the exact rational
/// exponent r = c(lambda)/(ell + h-check).
struct MonodromyDatum {
  lie::Weight label;
  Rational exponent;        // r, in lowest terms
  unsigned long order = 0;  // order of e^{i pi r} as a root of unity
};

MonodromyDatum monodromy(const lie::SimpleLieAlgebra& alg, long level,
                         const lie::Weight& label);

struct DegenerationReport {
  lie::Weight label;
  int depth = 0;
  Rational expected_scalar;  // -c(lambda)/(2(ell+h-check))
  Rational max_residual;
  long degrees_checked = 0;
  bool ok() const { return max_residual.is_zero(); }
};

/// Per-degree form of the degeneration operator statement: on the gluing
/// tensor, T(t_+ d/dt_+) acting on the first slot equals
/// (-d - c(lambda)/(2(ell+h-check))) times the identity for d = 0..depth.
DegenerationReport degeneration_operator_check(const lie::SimpleLieAlgebra& alg,
                                               long level, const lie::Weight& label,
                                               int depth);

}  // namespace wzw::fusion
