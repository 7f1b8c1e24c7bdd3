#pragma once

#include <map>
#include <utility>

#include "wzw/series.hpp"

namespace wzw::affine {

/// Expansion of a regular function at a node in the two branch parameters:
/// Laurent polynomials in t_+ and t_- whose coefficients are truncated series
/// in the smoothing parameter tau = t_+ t_-.
struct NodeExpansion {
  std::map<int, TruncatedSeries> plus_side;   // exponent of t_+ -> series in tau
  std::map<int, TruncatedSeries> minus_side;  // exponent of t_- -> series in tau

  const TruncatedSeries* plus_coeff(int exponent) const;
  const TruncatedSeries* minus_coeff(int exponent) const;
};

/// Expands sum a_{m,n} t_+^m t_-^n along the two branches:
/// the monomial t_+^m t_-^n becomes (t_+^{m-n} tau^n, t_-^{n-m} tau^m).
/// Terms above tau^tau_order are dropped.
NodeExpansion expand_node_function(const std::map<std::pair<int, int>, Rational>& coeffs,
                                   int tau_order);

}  // namespace wzw::affine
