#include "wzw/node_expansion.hpp"

#include <stdexcept>

namespace wzw::affine {

const TruncatedSeries* NodeExpansion::plus_coeff(int exponent) const {
  auto it = plus_side.find(exponent);
  return it == plus_side.end() ? nullptr : &it->second;
}

const TruncatedSeries* NodeExpansion::minus_coeff(int exponent) const {
  auto it = minus_side.find(exponent);
  return it == minus_side.end() ? nullptr : &it->second;
}

NodeExpansion expand_node_function(const std::map<std::pair<int, int>, Rational>& coeffs,
                                   int tau_order) {
  if (tau_order < 0) throw std::invalid_argument("expand_node_function: negative order");
  NodeExpansion out;
  auto add_term = [&](std::map<int, TruncatedSeries>& side, int exponent, int tau_deg,
                      const Rational& c) {
    if (tau_deg > tau_order || c.is_zero()) return;
    auto it = side.find(exponent);
    if (it == side.end())
      it = side.emplace(exponent, TruncatedSeries("tau", tau_order)).first;
    it->second.add_coeff(tau_deg, c);
  };
  for (const auto& [mn, a] : coeffs) {
    auto [m, n] = mn;
    if (m < 0 || n < 0)
      throw std::invalid_argument("expand_node_function: negative exponent");
    add_term(out.plus_side, m - n, n, a);
    add_term(out.minus_side, n - m, m, a);
  }
  // Drop exponents whose series truncated to zero.
  for (auto* side : {&out.plus_side, &out.minus_side})
    for (auto it = side->begin(); it != side->end();)
      it = it->second.is_zero() ? side->erase(it) : std::next(it);
  return out;
}

}  // namespace wzw::affine
