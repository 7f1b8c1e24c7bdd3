#include "wzw/tensor.hpp"

#include <stdexcept>

namespace wzw::blocks {

TensorSpace::TensorSpace(const lie::SimpleLieAlgebra& alg,
                         std::vector<lie::FiniteIrrep> factors)
    : alg_(&alg), factors_(std::move(factors)) {
  stride_.assign(factors_.size(), 1);
  for (std::size_t s = factors_.size(); s-- > 0;) {
    if (s + 1 < factors_.size()) stride_[s] = stride_[s + 1] * factors_[s + 1].dimension;
  }
  for (const auto& f : factors_) dim_ *= f.dimension;
}

SparseMatrix TensorSpace::slot_operator(std::size_t s, const SparseMatrix& m) const {
  if (s >= factors_.size()) throw std::out_of_range("TensorSpace::slot_operator");
  const std::size_t ds = factors_[s].dimension;
  if (m.rows() != ds || m.cols() != ds)
    throw std::invalid_argument("TensorSpace::slot_operator: shape mismatch");
  SparseMatrix out(dim_, dim_);
  for (std::size_t g = 0; g < dim_; ++g) {
    const std::size_t digit = (g / stride_[s]) % ds;
    const std::size_t base = g - digit * stride_[s];
    // column `digit` of m
    for (std::size_t r = 0; r < ds; ++r) {
      const Rational& v = m.at(r, digit);
      if (!v.is_zero()) out.add_at(base + r * stride_[s], g, v);
    }
  }
  return out;
}

SparseMatrix TensorSpace::diagonal_action(const Vec& coords) const {
  SparseMatrix out(dim_, dim_);
  for (std::size_t s = 0; s < factors_.size(); ++s)
    out = out + slot_operator(s, factors_[s].action_of(coords));
  return out;
}

SparseMatrix TensorSpace::casimir_pair(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("TensorSpace::casimir_pair: equal slots");
  SparseMatrix out(dim_, dim_);
  for (const auto& [x, y] : alg_->dual_pairs)
    out = out + slot_operator(i, factors_[i].action_of(x)) *
                    slot_operator(j, factors_[j].action_of(y));
  return out;
}

}  // namespace wzw::blocks
