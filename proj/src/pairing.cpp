#include "wzw/pairing.hpp"

#include <map>
#include <stdexcept>

#include "wzw/linalg.hpp"

namespace wzw::affine {

SparseMatrix invariant_duality(const lie::FiniteIrrep& v, const lie::FiniteIrrep& w) {
  const lie::SimpleLieAlgebra& alg = *v.algebra;
  const std::size_t nv = v.dimension, nw = w.dimension;
  // Unknown B (nv x nw), flattened row-major; constraints
  // sum_k act_v(X)[k,i] B[k,j] + sum_l B[i,l] act_w(X)[l,j] = 0.
  SparseMatrix sys(alg.dim * nv * nw, nv * nw);
  for (std::size_t b = 0; b < alg.dim; ++b) {
    const SparseMatrix& av = v.action[b];
    const SparseMatrix& aw = w.action[b];
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = 0; j < nw; ++j) {
        const Index r = (b * nv + i) * nw + j;
        for (std::size_t k = 0; k < nv; ++k) {
          const Rational& c = av.at(k, i);
          if (!c.is_zero()) sys.add_at(r, k * nw + j, c);
        }
        for (std::size_t l = 0; l < nw; ++l) {
          const Rational& c = aw.at(l, j);
          if (!c.is_zero()) sys.add_at(r, i * nw + l, c);
        }
      }
    }
  }
  std::vector<Vec> ker = kernel_basis(sys);
  if (ker.size() != 1)
    throw std::invalid_argument("invariant_duality: representations are not dual");

  SparseMatrix b(nv, nw);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nw; ++j)
      if (!ker[0][i * nw + j].is_zero()) b.set(i, j, ker[0][i * nw + j]);
  // Normalize on the highest weight vector's row.
  Rational pivot;
  for (std::size_t j = 0; j < nw; ++j)
    if (!b.at(0, j).is_zero()) {
      pivot = b.at(0, j);
      break;
    }
  if (pivot.is_zero())
    throw std::logic_error("invariant_duality: degenerate pairing");
  return b.scaled(pivot.reciprocal());
}

SparseMatrix contravariant_pairing(const GradedAffineModule& plus,
                                   const GradedAffineModule& minus, int d_plus,
                                   int d_minus) {
  if (plus.mode != Mode::affine || minus.mode != Mode::affine)
    throw std::invalid_argument("contravariant_pairing: affine modules required");
  if (plus.level != minus.level)
    throw std::invalid_argument("contravariant_pairing: level mismatch");
  if (!plus.in_window(d_plus) || !minus.in_window(d_minus))
    throw std::invalid_argument("contravariant_pairing: degree out of window");

  if (d_plus == 0 && d_minus == 0) return invariant_duality(*plus.bottom, *minus.bottom);

  const std::size_t np = plus.dims[static_cast<std::size_t>(d_plus)];
  const std::size_t nm = minus.dims[static_cast<std::size_t>(d_minus)];
  SparseMatrix out(np, nm);

  if (d_plus > 0) {
    // Basis vector i is (X_b t_+^-1) u; adjointness moves X_b across:
    // b((X_b t_+^-1)u, u') = -b(u, (X_b t_-^+1) u').
    if (d_minus == 0) return out;  // X t_-^+1 annihilates the bottom
    SparseMatrix prev = contravariant_pairing(plus, minus, d_plus - 1, d_minus - 1);
    std::map<std::size_t, SparseMatrix> by_generator;
    for (std::size_t i = 0; i < np; ++i) {
      auto [b, u] = plus.provenance[static_cast<std::size_t>(d_plus)][i];
      auto it = by_generator.find(b);
      if (it == by_generator.end())
        it = by_generator.emplace(b, prev * minus.action(b, 1, d_minus)).first;
      for (const auto& [j, val] : it->second.row(u)) out.set(i, j, -val);
    }
    return out;
  }

  // d_plus == 0, d_minus > 0: peel the minus side instead; the raising
  // operator on the bottom of the plus module is the empty map, so this
  // block vanishes.
  return out;
}

EpsilonTensor epsilon_tensor(const GradedAffineModule& plus,
                             const GradedAffineModule& minus) {
  if (plus.depth != minus.depth)
    throw std::invalid_argument("epsilon_tensor: depth mismatch");
  EpsilonTensor eps;
  eps.label = plus.bottom->highest_weight;
  eps.depth = plus.depth;
  for (int d = 0; d <= plus.depth; ++d) {
    SparseMatrix p = contravariant_pairing(plus, minus, d, d);
    if (p.rows() != p.cols())
      throw std::logic_error("epsilon_tensor: pairing block is not square");
    // eps_d is the inverse tensor: with P the pairing matrix, E = (P^T)^-1
    // makes the adjointness identity A E_{d+k} + E_d B^T = 0 exact.
    eps.per_degree.push_back(inverse(p.transposed()));
  }
  return eps;
}

SparseMatrix epsilon_invariance_residual(const GradedAffineModule& plus,
                                         const GradedAffineModule& minus,
                                         const EpsilonTensor& eps, std::size_t b,
                                         int k, int d) {
  if (d < 0 || d > plus.depth || d + k < 0 || d + k > plus.depth)
    throw std::invalid_argument("epsilon_invariance_residual: degrees out of window");
  // (X t_+^k (x) id) eps_{d+k}: apply A = action from degree d+k to d on the
  // first slot; (id (x) X t_-^{-k}) eps_d: apply B on the second slot.
  const SparseMatrix& e_up = eps.per_degree[static_cast<std::size_t>(d + k)];
  const SparseMatrix& e_lo = eps.per_degree[static_cast<std::size_t>(d)];
  SparseMatrix a = plus.action(b, k, d + k);
  SparseMatrix bm = minus.action(b, -k, d);
  return a * e_up + e_lo * bm.transposed();
}

}  // namespace wzw::affine
