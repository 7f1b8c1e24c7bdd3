#include "wzw/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace wzw::fusion {

namespace {

/// Insertions at the canonical points 0, 1, 2, ...
std::vector<blocks::Insertion> at_canonical_points(const std::vector<lie::Weight>& labels) {
  std::vector<blocks::Insertion> ins;
  for (std::size_t i = 0; i < labels.size(); ++i)
    ins.push_back({Rational(static_cast<long>(i)), labels[i]});
  return ins;
}

}  // namespace

std::size_t FusionRing::label_index(const lie::Weight& w) const {
  auto it = std::find(labels.begin(), labels.end(), w);
  if (it == labels.end())
    throw std::invalid_argument("FusionRing: label " + lie::weight_to_string(w) +
                                " not in P_ell");
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t FusionRing::dual_index(std::size_t a) const {
  return label_index(lie::dualize(*algebra, labels[a]));
}

FusionRing fusion_ring(const lie::SimpleLieAlgebra& alg, long level) {
  if (level < 1) throw std::invalid_argument("fusion_ring: level must be positive");
  FusionRing ring;
  ring.algebra = &alg;
  ring.level = level;
  ring.labels = lie::enumerate_P_ell(alg, level);
  const std::size_t n = ring.labels.size();
  ring.coeff.assign(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        lie::Weight cstar = lie::dualize(alg, ring.labels[c]);
        auto bs = blocks::block(
            alg, level, at_canonical_points({ring.labels[a], ring.labels[b], cstar}));
        ring.coeff[(a * n + b) * n + c] = static_cast<long>(bs.dimension());
      }
  return ring;
}

namespace {

long genus_zero_dim(const FusionRing& ring, std::vector<std::size_t> idx) {
  const std::size_t zero = ring.label_index(lie::Weight(ring.algebra->rank_, 0));
  if (idx.empty()) return 1;  // vacuum block on the line
  if (idx.size() == 1) return idx[0] == zero ? 1 : 0;
  if (idx.size() == 2) return ring.dual_index(idx[0]) == idx[1] ? 1 : 0;
  // dim(l1, l2, rest) = sum_nu N_{l1 l2}^nu dim(nu, rest)
  long total = 0;
  std::vector<std::size_t> rest(idx.begin() + 2, idx.end());
  for (std::size_t nu = 0; nu < ring.labels.size(); ++nu) {
    long c = ring.n(idx[0], idx[1], nu);
    if (c == 0) continue;
    std::vector<std::size_t> next;
    next.push_back(nu);
    next.insert(next.end(), rest.begin(), rest.end());
    total += c * genus_zero_dim(ring, std::move(next));
  }
  return total;
}

}  // namespace

long verlinde_dim(const FusionRing& ring, long genus,
                  const std::vector<lie::Weight>& boundary) {
  if (genus < 0) throw std::invalid_argument("verlinde_dim: negative genus");
  std::vector<std::size_t> idx;
  for (const auto& w : boundary) idx.push_back(ring.label_index(w));
  if (genus == 0) return genus_zero_dim(ring, idx);
  // dim_g(...) = sum_mu dim_{g-1}(mu, mu*, ...)
  long total = 0;
  for (std::size_t mu = 0; mu < ring.labels.size(); ++mu) {
    std::vector<lie::Weight> next;
    next.push_back(ring.labels[mu]);
    next.push_back(lie::dualize(*ring.algebra, ring.labels[mu]));
    next.insert(next.end(), boundary.begin(), boundary.end());
    total += verlinde_dim(ring, genus - 1, next);
  }
  return total;
}

FactorizationReport factorization_check(const lie::SimpleLieAlgebra& alg, long level,
                                        const std::vector<lie::Weight>& labels,
                                        const std::vector<bool>& in_first) {
  if (in_first.size() != labels.size())
    throw std::invalid_argument("factorization_check: mask size mismatch");
  std::vector<lie::Weight> part1, part2;
  for (std::size_t i = 0; i < labels.size(); ++i)
    (in_first[i] ? part1 : part2).push_back(labels[i]);
  if (part1.empty() || part2.empty())
    throw std::invalid_argument("factorization_check: both parts must be nonempty");

  FactorizationReport report;
  report.total_dim = blocks::block(alg, level, at_canonical_points(labels)).dimension();
  for (const auto& mu : lie::enumerate_P_ell(alg, level)) {
    FactorizationChannel ch;
    ch.channel = mu;
    std::vector<lie::Weight> left = part1;
    left.push_back(mu);
    std::vector<lie::Weight> right = part2;
    right.push_back(lie::dualize(alg, mu));
    ch.left_dim = blocks::block(alg, level, at_canonical_points(left)).dimension();
    ch.right_dim = blocks::block(alg, level, at_canonical_points(right)).dimension();
    report.channel_sum += ch.left_dim * ch.right_dim;
    report.channels.push_back(std::move(ch));
  }
  return report;
}

}  // namespace wzw::fusion
