#include "wzw/monodromy.hpp"

#include <stdexcept>

#include "wzw/sugawara.hpp"

namespace wzw::fusion {

MonodromyDatum monodromy(const lie::SimpleLieAlgebra& alg, long level,
                         const lie::Weight& label) {
  if (lie::level_of_weight(alg, label) > level)
    throw std::invalid_argument("monodromy: label has level > " + std::to_string(level));
  lie::FiniteIrrep rep = lie::build_irrep(alg, label);

  MonodromyDatum md;
  md.label = label;
  md.exponent = rep.casimir_scalar / (Rational(level) + alg.dual_coxeter);
  // Smallest n >= 1 with n r in 2Z: n = 2q / gcd(p, 2q) for r = p/q.
  mpz_class p = md.exponent.num();
  mpz_class q2 = 2 * md.exponent.den();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q2.get_mpz_t());
  mpz_class n = q2 / g;
  md.order = n.get_ui();
  return md;
}

DegenerationReport degeneration_operator_check(const lie::SimpleLieAlgebra& alg,
                                               long level, const lie::Weight& label,
                                               int depth) {
  using namespace affine;
  GradedAffineModule plus = build_module(Mode::affine, &alg, label, level, depth);
  GradedAffineModule minus =
      build_module(Mode::affine, &alg, lie::dualize(alg, label), level, depth);
  EpsilonTensor eps = epsilon_tensor(plus, minus);
  SugawaraOperator t0 = sugawara(plus, 0);

  DegenerationReport report;
  report.label = label;
  report.depth = depth;
  report.expected_scalar = -plus.bottom->casimir_scalar /
                           (Rational(2) * (Rational(level) + alg.dual_coxeter));
  for (int d = 0; d <= depth; ++d) {
    const SparseMatrix& e = eps.per_degree[static_cast<std::size_t>(d)];
    // T(t_+ d/dt_+) (x) id on eps_d, plus d eps_d, minus the expected scalar.
    SparseMatrix lhs = t0.at(d) * e + e.scaled(Rational(d));
    SparseMatrix rhs = e.scaled(report.expected_scalar);
    Rational mx = (lhs - rhs).max_abs();
    if (mx > report.max_residual) report.max_residual = mx;
    ++report.degrees_checked;
  }
  return report;
}

}  // namespace wzw::fusion
