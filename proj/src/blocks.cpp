#include "wzw/blocks.hpp"

#include <stdexcept>

namespace wzw::blocks {

namespace {

std::vector<lie::FiniteIrrep> build_factors(const lie::SimpleLieAlgebra& alg,
                                            const std::vector<lie::Weight>& labels) {
  std::vector<lie::FiniteIrrep> factors;
  factors.reserve(labels.size());
  for (const auto& w : labels) factors.push_back(lie::build_irrep(alg, w));
  return factors;
}

std::vector<Vec> diagonal_images(const lie::SimpleLieAlgebra& alg, const TensorSpace& t) {
  std::vector<Vec> gens;
  for (std::size_t b = 0; b < alg.dim; ++b) {
    SparseMatrix d = t.diagonal_action(unit_vec(alg.dim, b));
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Vec c = d.column(j);
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  }
  return gens;
}

}  // namespace

QuotientMap covariants(const lie::SimpleLieAlgebra& alg,
                       const std::vector<lie::Weight>& labels) {
  TensorSpace t(alg, build_factors(alg, labels));
  return image_quotient(t.dim(), diagonal_images(alg, t));
}

Vec regular_nilpotent(const lie::SimpleLieAlgebra& alg) {
  Vec x = zero_vec(alg.dim);
  for (std::size_t i : alg.chevalley_e) x[i] = Rational(1);
  return x;
}

SparseMatrix weighted_nilpotent(const TensorSpace& t, const std::vector<Insertion>& ins,
                                const Vec& nilpotent) {
  SparseMatrix m(t.dim(), t.dim());
  for (std::size_t s = 0; s < t.slots(); ++s)
    m = m + t.slot_operator(s, t.factor(s).action_of(nilpotent)).scaled(ins[s].point);
  return m;
}

BlockSpace block_with_nilpotent(const lie::SimpleLieAlgebra& alg, long level,
                                const std::vector<Insertion>& insertions,
                                const Vec& nilpotent) {
  if (level < 1) throw std::invalid_argument("block: level must be positive");
  std::vector<lie::Weight> labels;
  for (const auto& ins : insertions) {
    if (lie::level_of_weight(alg, ins.label) > level)
      throw std::invalid_argument("block: label " + lie::weight_to_string(ins.label) +
                                  " has level > " + std::to_string(level));
    labels.push_back(ins.label);
  }
  for (std::size_t i = 0; i < insertions.size(); ++i)
    for (std::size_t j = i + 1; j < insertions.size(); ++j)
      if (insertions[i].point == insertions[j].point)
        throw std::invalid_argument("block: coincident insertion points");

  BlockSpace b;
  b.algebra = &alg;
  b.level = level;
  b.insertions = insertions;
  b.tensor.emplace(alg, build_factors(alg, labels));
  const TensorSpace& t = *b.tensor;

  b.kernel_generators = diagonal_images(alg, t);
  b.covariant_quotient = image_quotient(t.dim(), b.kernel_generators);

  SparseMatrix m = weighted_nilpotent(t, insertions, nilpotent);
  SparseMatrix power = SparseMatrix::identity(t.dim());
  for (long p = 0; p <= level; ++p) power = power * m;
  for (std::size_t j = 0; j < t.dim(); ++j) {
    Vec c = power.column(j);
    if (!is_zero(c)) b.kernel_generators.push_back(std::move(c));
  }
  b.block_quotient = image_quotient(t.dim(), b.kernel_generators);
  return b;
}

BlockSpace block(const lie::SimpleLieAlgebra& alg, long level,
                 const std::vector<Insertion>& insertions) {
  return block_with_nilpotent(alg, level, insertions, lie::highest_root_vector(alg));
}

bool nilpotent_images_match(const lie::SimpleLieAlgebra& alg, long level,
                            const std::vector<Insertion>& insertions, const Vec& first,
                            const Vec& second) {
  std::vector<lie::Weight> labels;
  for (const auto& ins : insertions) labels.push_back(ins.label);
  TensorSpace t(alg, build_factors(alg, labels));
  QuotientMap cov = image_quotient(t.dim(), diagonal_images(alg, t));

  auto projected_images = [&](const Vec& nil) {
    SparseMatrix m = weighted_nilpotent(t, insertions, nil);
    SparseMatrix power = SparseMatrix::identity(t.dim());
    for (long p = 0; p <= level; ++p) power = power * m;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Vec c = cov.projection.apply(power.column(j));
      if (!is_zero(c)) cols.push_back(std::move(c));
    }
    return cols;
  };

  std::vector<Vec> a = projected_images(first);
  std::vector<Vec> b = projected_images(second);
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const Index n = cov.quotient_dim;
  Index ra = rank(SparseMatrix::from_rows(a, n));
  Index rb = rank(SparseMatrix::from_rows(b, n));
  Index rab = rank(SparseMatrix::from_rows(both, n));
  return ra == rb && rb == rab;
}

Vec random_conjugate(const lie::SimpleLieAlgebra& alg, const Vec& base,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-2, 2);
  const std::size_t npos = (alg.dim - alg.rank_) / 2;

  auto exp_ad = [&](const Vec& y, Vec x) {
    SparseMatrix ad(alg.dim, alg.dim);
    for (std::size_t b = 0; b < alg.dim; ++b)
      if (!y[b].is_zero()) ad = ad + alg.adjoint(b).scaled(y[b]);
    Vec term = x;
    Rational factorial(1);
    for (long k = 1; k <= 2 * static_cast<long>(alg.n); ++k) {
      term = ad.apply(term);
      if (is_zero(term)) break;
      factorial *= Rational(k);
      x = add(x, scale(term, factorial.reciprocal()));
    }
    return x;
  };

  // Conjugate by exp(lower) then exp(upper); both are ad-nilpotent.
  Vec lower = zero_vec(alg.dim), upper = zero_vec(alg.dim);
  for (std::size_t m = 0; m < npos; ++m) {
    upper[alg.rank_ + m] = Rational(small(rng));
    lower[alg.rank_ + npos + m] = Rational(small(rng));
  }
  return exp_ad(upper, exp_ad(lower, base));
}

PropagationReport propagation_check(const lie::SimpleLieAlgebra& alg, long level,
                                    const std::vector<Insertion>& insertions,
                                    const Rational& extra_point) {
  for (const auto& ins : insertions)
    if (ins.point == extra_point)
      throw std::invalid_argument("propagation_check: extra point coincides");
  PropagationReport r;
  r.base_dim = block(alg, level, insertions).dimension();
  std::vector<Insertion> extended = insertions;
  extended.push_back({extra_point, lie::Weight(alg.rank_, 0)});
  r.extended_dim = block(alg, level, extended).dimension();
  return r;
}

}  // namespace wzw::blocks
