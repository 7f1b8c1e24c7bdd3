#pragma once

#include <optional>
#include <random>
#include <vector>

#include "wzw/linalg.hpp"
#include "wzw/tensor.hpp"

namespace wzw::blocks {

struct Insertion {
  Rational point;
  lie::Weight label;
};

/// Genus-zero conformal block at rational points: the quotient of the tensor
/// product of the inserted irreps by the diagonal algebra action and by the
/// image of (sum_i z_i X_(i))^{ell+1}, where X is the highest-root vector
/// (any other vector in its orbit gives the same quotient). For sl2 this is
/// also the regular nilpotent e_1; in higher rank the regular element cuts
/// too much and already kills two-point duality blocks.
class BlockSpace {
public:
  const lie::SimpleLieAlgebra* algebra = nullptr;
  long level = 0;
  std::vector<Insertion> insertions;
  std::optional<TensorSpace> tensor;
  QuotientMap covariant_quotient;  // by the diagonal action alone
  QuotientMap block_quotient;      // by diagonal action + nilpotent power image
  /// Generators of the subspace the block quotient kills (diagonal images,
  /// then nilpotent-power images) — the descent witnesses for operators.
  std::vector<Vec> kernel_generators;

  std::size_t tensor_dim() const { return tensor ? tensor->dim() : 1; }
  std::size_t covariant_dim() const { return covariant_quotient.quotient_dim; }
  std::size_t dimension() const { return block_quotient.quotient_dim; }
};

/// Quotient of V_1 (x) ... (x) V_N by the diagonal algebra action.
QuotientMap covariants(const lie::SimpleLieAlgebra& alg,
                       const std::vector<lie::Weight>& labels);

/// The regular nilpotent (sum of the simple raising generators). For sl2 it
/// equals the highest-root vector used in the level cut.
Vec regular_nilpotent(const lie::SimpleLieAlgebra& alg);

/// sum_i z_i X_(i) for a given nilpotent X on the tensor space.
SparseMatrix weighted_nilpotent(const TensorSpace& t, const std::vector<Insertion>& ins,
                                const Vec& nilpotent);

BlockSpace block(const lie::SimpleLieAlgebra& alg, long level,
                 const std::vector<Insertion>& insertions);

/// Block with the same labels but a custom nilpotent in the power cut; used
/// to confirm the quotient is independent of the regular nilpotent chosen.
BlockSpace block_with_nilpotent(const lie::SimpleLieAlgebra& alg, long level,
                                const std::vector<Insertion>& insertions,
                                const Vec& nilpotent);

/// True when the two nilpotents cut out the same subspace of the covariant
/// quotient (span equality of the projected power images, exact).
bool nilpotent_images_match(const lie::SimpleLieAlgebra& alg, long level,
                            const std::vector<Insertion>& insertions, const Vec& first,
                            const Vec& second);

/// A nilpotent conjugated by a random unipotent group element; exact over
/// the rationals and deterministic in the rng state. Stays in the orbit of
/// `base`.
Vec random_conjugate(const lie::SimpleLieAlgebra& alg, const Vec& base,
                     std::mt19937_64& rng);

struct PropagationReport {
  std::size_t base_dim = 0;
  std::size_t extended_dim = 0;
  bool ok() const { return base_dim == extended_dim; }
};

/// Adds a trivial-label insertion at extra_point and compares dimensions.
PropagationReport propagation_check(const lie::SimpleLieAlgebra& alg, long level,
                                    const std::vector<Insertion>& insertions,
                                    const Rational& extra_point);

}  // namespace wzw::blocks
