#pragma once

#include <vector>

#include "wzw/blocks.hpp"

namespace wzw::fusion {

/// Level-ell fusion ring of the algebra: labels are P_ell, coefficients come
/// from three-point genus-zero blocks.
struct FusionRing {
  const lie::SimpleLieAlgebra* algebra = nullptr;
  long level = 0;
  std::vector<lie::Weight> labels;  // enumerate_P_ell order
  std::vector<long> coeff;          // N[a][b][c] flattened

  long n(std::size_t a, std::size_t b, std::size_t c) const {
    return coeff[(a * labels.size() + b) * labels.size() + c];
  }
  std::size_t label_index(const lie::Weight& w) const;
  std::size_t dual_index(std::size_t a) const;
};

/// N_{lambda mu}^nu = dim block(lambda, mu, nu*) at three distinct points.
FusionRing fusion_ring(const lie::SimpleLieAlgebra& alg, long level);

/// Dimension by pair-of-pants recursion:
///   genus reduction  dim_g(...) = sum_mu dim_{g-1}(mu, mu*, ...)
///   strand reduction dim_0(l1, l2, rest) = sum_nu N_{l1 l2}^nu dim_0(nu, rest)
long verlinde_dim(const FusionRing& ring, long genus,
                  const std::vector<lie::Weight>& boundary);

struct FactorizationChannel {
  lie::Weight channel;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
};

struct FactorizationReport {
  std::size_t total_dim = 0;  // dim block(all labels)
  std::vector<FactorizationChannel> channels;
  std::size_t channel_sum = 0;
  bool ok() const { return total_dim == channel_sum; }
};

/// Verifies dim block(labels) = sum_mu dim block(part1 + {mu}) *
/// dim block(part2 + {mu*}); in_first selects part1 and must leave both
/// parts nonempty. All blocks are computed directly.
FactorizationReport factorization_check(const lie::SimpleLieAlgebra& alg, long level,
                                        const std::vector<lie::Weight>& labels,
                                        const std::vector<bool>& in_first);

}  // namespace wzw::fusion
