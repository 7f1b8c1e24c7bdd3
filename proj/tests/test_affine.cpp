#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wzw/affine.hpp"
#include "wzw/node_expansion.hpp"
#include "wzw/pairing.hpp"
#include "wzw/sugawara.hpp"

using namespace wzw;
using namespace wzw::affine;

namespace {

GradedAffineModule oscillator(int depth) {
  return build_module(Mode::oscillator, nullptr, {}, 1, depth);
}

GradedAffineModule vacuum_sl2(long level, int depth, const lie::SimpleLieAlgebra& alg) {
  return build_module(Mode::affine, &alg, {0}, level, depth);
}

}  // namespace

TEST_CASE("oscillator degree dimensions are partition counts") {
  GradedAffineModule m = oscillator(4);
  std::vector<std::size_t> expected;
  for (int d = 0; d <= 4; ++d) expected.push_back(oracles::partitions(d).size());
  CHECK(m.dims == expected);
  CHECK(m.dims == std::vector<std::size_t>{1, 1, 2, 3, 5});
  for (const auto& g : m.gram) CHECK(rank(g) == g.rows());
}

TEST_CASE("oscillator commutation [t^k, t^-l] = k delta_kl") {
  GradedAffineModule m = oscillator(5);
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (int d = 0; d + l <= 5 && d <= 5; ++d) {
        if (d + l - k < 0 || d + l - k > 5 || d - k < 0) continue;
        SparseMatrix lhs = m.action(0, k, d + l) * m.action(0, -l, d) -
                           m.action(0, -l, d - k) * m.action(0, k, d);
        SparseMatrix rhs(m.dims[static_cast<std::size_t>(d + l - k)],
                         m.dims[static_cast<std::size_t>(d)]);
        if (k == l)
          rhs = SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)])
                    .scaled(Rational(k));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("oscillator vacuum conditions") {
  GradedAffineModule m = oscillator(3);
  GradedVector v0 = vacuum_vector(m);
  for (int k = 0; k <= 3; ++k) {
    LoopElement e{Vec{Rational(1)}, k, false};
    CHECK(loop_act(m, e, v0).is_zero());
  }
  // central element acts as hbar = 1
  GradedVector c = loop_act(m, LoopElement::central_element(1), v0);
  CHECK(c.comp[0] == Vec{Rational(1)});
}

TEST_CASE("affine module of sl2 at level 1") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule m = vacuum_sl2(1, 3, alg);
  CHECK(m.dims[0] == 1);
  // raw degree-1 space is g (x) t^-1 v0, dim 3, and the Gram kernel there is
  // zero: by hand <X t^-1 v0, Y t^-1 v0> = ell (omega X | Y)
  SparseMatrix hand(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      hand.set(a, b, alg.invariant_form.at(alg.omega(a), b));
  REQUIRE(rank(hand) == 3);
  CHECK(m.dims[1] == 3);
  for (int d = 0; d <= 3; ++d) {
    CHECK(m.gram[static_cast<std::size_t>(d)] ==
          m.gram[static_cast<std::size_t>(d)].transposed());
    CHECK(rank(m.gram[static_cast<std::size_t>(d)]) == m.dims[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("level-1 graded dimensions match the lattice realization") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  // vacuum: dim_d = sum_m p(d - m^2); spin-half: dim_d = sum_m p(d - m^2 - m)
  GradedAffineModule v0 = build_module(Mode::affine, &alg, {0}, 1, 5);
  GradedAffineModule v1 = build_module(Mode::affine, &alg, {1}, 1, 4);
  auto p = [](int n) {
    return n < 0 ? 0 : (long)oracles::partitions(n).size();
  };
  for (int d = 0; d <= 5; ++d) {
    long expect = 0;
    for (int m = -3; m <= 3; ++m) expect += p(d - m * m);
    CHECK((long)v0.dims[static_cast<std::size_t>(d)] == expect);
  }
  CHECK(v0.dims == std::vector<std::size_t>{1, 3, 4, 7, 13, 19});
  for (int d = 0; d <= 4; ++d) {
    long expect = 0;
    for (int m = -3; m <= 3; ++m) expect += p(d - m * m - m);
    CHECK((long)v1.dims[static_cast<std::size_t>(d)] == expect);
  }
  CHECK(v1.dims == std::vector<std::size_t>{2, 2, 6, 8, 14});
}

TEST_CASE("level-2 graded dimensions satisfy the coset decomposition") {
  // V_0 (x) V_0 at level 1 decomposes over level 2 against the two c = 1/2
  // Virasoro modules: conv(v0, v0) = conv(L20, chi_0) + conv(L22, chi_1/2)
  // with the h = 1/2 factor shifted one degree up.
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  auto v0 = build_module(Mode::affine, &alg, {0}, 1, 4).dims;
  auto l20 = build_module(Mode::affine, &alg, {0}, 2, 4).dims;
  auto l22 = build_module(Mode::affine, &alg, {2}, 2, 4).dims;
  CHECK(l20 == std::vector<std::size_t>{1, 3, 9, 15, 30});
  CHECK(l22 == std::vector<std::size_t>{3, 4, 12, 21, 43});
  std::vector<long> chi0{1, 0, 1, 1, 2}, chi12{1, 1, 1, 1, 2};
  for (int d = 0; d <= 4; ++d) {
    long lhs = 0, rhs = 0;
    for (int i = 0; i <= d; ++i) {
      lhs += (long)(v0[(std::size_t)i] * v0[(std::size_t)(d - i)]);
      rhs += (long)l20[(std::size_t)i] * chi0[(std::size_t)(d - i)];
      if (i < d) rhs += (long)l22[(std::size_t)i] * chi12[(std::size_t)(d - 1 - i)];
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Virasoro relations at level 2") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule m = build_module(Mode::affine, &alg, {0}, 2, 3);
  CHECK(virasoro_central_scalar(m) == Rational(3, 2));  // 2*3/(2+2)
  VirasoroReport r = virasoro_check(m, 3, 3);
  CHECK(r.ok());
  GradedAffineModule m1 = build_module(Mode::affine, &alg, {1}, 2, 3);
  CHECK(virasoro_check(m1, 2, 3).ok());
  CHECK(derivation_property_check(m1, 2, 2).ok());
}

TEST_CASE("epsilon tensor at level 2") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  for (long w : {1L, 2L}) {
    lie::Weight lam{w};
    GradedAffineModule plus = build_module(Mode::affine, &alg, lam, 2, 2);
    GradedAffineModule minus =
        build_module(Mode::affine, &alg, lie::dualize(alg, lam), 2, 2);
    EpsilonTensor eps = epsilon_tensor(plus, minus);
    for (std::size_t b = 0; b < alg.dim; ++b)
      for (int k = 1; k <= 2; ++k)
        for (int d = 0; d + k <= 2; ++d)
          CHECK(epsilon_invariance_residual(plus, minus, eps, b, k, d).is_zero());
    // eigenvalue -d - c(lambda)/(2(2+2)): 3/16 for (1), 1/2 for (2)
    Rational h = plus.bottom->casimir_scalar / Rational(8);
    if (w == 1) CHECK(h == Rational(3, 16));
    if (w == 2) CHECK(h == Rational(1, 2));
    SugawaraOperator t0 = sugawara(plus, 0);
    for (int d = 0; d <= 2; ++d) {
      const SparseMatrix& e = eps.per_degree[static_cast<std::size_t>(d)];
      CHECK(t0.at(d) * e == e.scaled(Rational(-d) - h));
    }
  }
}

TEST_CASE("rejects bottom weights above the level") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  CHECK_THROWS_AS(build_module(Mode::affine, &alg, {2}, 1, 2), std::invalid_argument);
  CHECK_NOTHROW(build_module(Mode::affine, &alg, {2}, 2, 1));
}

TEST_CASE("loop_act basics on the affine vacuum module") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule m = vacuum_sl2(1, 3, alg);
  GradedVector v0 = vacuum_vector(m);

  // central element acts as ell
  GradedVector c = loop_act(m, LoopElement::central_element(alg.dim), v0);
  CHECK(c.comp[0] == Vec{Rational(1)});

  // X t^k v0 = 0 for k >= 1
  for (std::size_t b = 0; b < alg.dim; ++b)
    for (int k = 1; k <= 3; ++k)
      CHECK(loop_act(m, LoopElement{unit_vec(alg.dim, b), k, false}, v0).is_zero());

  // (E t^-1)^2 v0 = 0 at level 1 (null vector)
  LoopElement elow{unit_vec(alg.dim, 1), -1, false};  // E at basis index 1
  GradedVector ev = loop_act(m, elow, v0);
  CHECK_FALSE(ev.is_zero());
  CHECK(loop_act(m, elow, ev).is_zero());

  // the selfsame vector is null for the raw Gram: by hand,
  // <(Et^-1)^2 v0, (Et^-1)^2 v0> = 2 ell^2 (E|F)^2 + 2 ell (E|F)([E,F]|..)
  // computed through the recursion it must be zero at ell = 1; check via the
  // library Gram on a depth-2 candidate expansion instead: the degree-2
  // dimension drops below the raw count.
  std::size_t raw_dim2 = 0;
  {
    // raw degree-2 monomials: (X t^-1)(Y t^-1) v0 symmetrized plus g t^-2 v0
    raw_dim2 = 3 * 3;  // candidates from degree 1
  }
  CHECK(m.dims[2] < raw_dim2);

  // out-of-window truncation is flagged
  GradedVector top = basis_vector(m, 3, 0);
  GradedVector pushed = loop_act(m, elow, top);
  CHECK(pushed.truncated);
  GradedVector dropped = loop_act(m, LoopElement{unit_vec(alg.dim, 1), 4, false}, top);
  CHECK_FALSE(dropped.truncated);  // annihilation below the bottom is exact
  CHECK(dropped.is_zero());
}

TEST_CASE("central-extension bracket holds on the loop action tables") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule m = vacuum_sl2(1, 3, alg);
  for (std::size_t a = 0; a < alg.dim; ++a)
    for (std::size_t b = 0; b < alg.dim; ++b)
      for (int k = -2; k <= 2; ++k)
        for (int l = -2; l <= 2; ++l)
          for (int d = 0; d <= 3; ++d) {
            if (!m.in_window(d - k) || !m.in_window(d - l) || !m.in_window(d - k - l))
              continue;
            SparseMatrix lhs = m.action(a, k, d - l) * m.action(b, l, d) -
                               m.action(b, l, d - k) * m.action(a, k, d);
            SparseMatrix rhs =
                m.action_of(alg.bracket(unit_vec(alg.dim, a), unit_vec(alg.dim, b)),
                            k + l, d);
            if (k + l == 0)
              rhs = rhs + SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)])
                              .scaled(Rational(k) * Rational(m.level) *
                                      alg.invariant_form.at(a, b));
            CHECK(lhs == rhs);
          }
}

TEST_CASE("truncation monotonicity") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule deep = vacuum_sl2(1, 4, alg);
  GradedAffineModule shallow = vacuum_sl2(1, 2, alg);
  for (int d = 0; d <= 2; ++d) {
    CHECK(deep.dims[static_cast<std::size_t>(d)] ==
          shallow.dims[static_cast<std::size_t>(d)]);
    CHECK(deep.gram[static_cast<std::size_t>(d)] ==
          shallow.gram[static_cast<std::size_t>(d)]);
  }
  for (std::size_t b = 0; b < alg.dim; ++b)
    for (int k = -2; k <= 2; ++k)
      for (int d = 0; d <= 2; ++d) {
        if (d - k < 0 || d - k > 2) continue;
        CHECK(deep.action(b, k, d) == shallow.action(b, k, d));
      }
}

TEST_CASE("Sugawara operator on the oscillator module") {
  GradedAffineModule m = oscillator(6);
  SugawaraOperator t0 = sugawara(m, 0);
  for (int d = 0; d <= 6; ++d)
    CHECK(t0.at(d) ==
          SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)]).scaled(Rational(-d)));
  // positive modes annihilate the vacuum: the target space is zero
  for (int k = 1; k <= 3; ++k) {
    SugawaraOperator tk = sugawara(m, k);
    REQUIRE(tk.defined(0));
    CHECK(tk.at(0).rows() == 0);
  }
}

TEST_CASE("Sugawara degree-0 scalar on affine modules") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  // level 1, lambda = (1): T(D_0) on degree 0 is -c(lambda)/(2(l+h)) = -1/4
  GradedAffineModule m = build_module(Mode::affine, &alg, {1}, 1, 2);
  SugawaraOperator t0 = sugawara(m, 0);
  CHECK(t0.at(0) == SparseMatrix::identity(2).scaled(Rational(-1, 4)));
  // vacuum module: T(D_0) v0 = 0 and T(D_k) v0 = 0 for k >= 1
  GradedAffineModule v = vacuum_sl2(1, 2, alg);
  CHECK(sugawara(v, 0).at(0).is_zero());
  for (int k = 1; k <= 2; ++k) CHECK(sugawara(v, k).at(0).rows() == 0);
}

TEST_CASE("oscillator Virasoro relations at depth 8") {
  GradedAffineModule m = oscillator(8);
  VirasoroReport r = virasoro_check(m, 3, 8);
  CHECK(r.ok());
  CHECK(r.max_residual.is_zero());
  CHECK(r.triples_checked > 0);
  CHECK(virasoro_central_scalar(m) == Rational(1));

  // single identity spelled out: [T_2, T_-2] = -4 T_0 + (1/2) id
  SugawaraOperator t2 = sugawara(m, 2), tm2 = sugawara(m, -2), t0 = sugawara(m, 0);
  for (int d = 2; d <= 6; ++d) {
    SparseMatrix lhs = t2.at(d - (-2)) * tm2.at(d) - tm2.at(d - 2) * t2.at(d);
    SparseMatrix rhs =
        t0.at(d).scaled(Rational(-4)) +
        SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)]).scaled(Rational(1, 2));
    CHECK(lhs == rhs);
  }
  // (k,l) = (1,0): no central term, [T_1, T_0] = -T_1
  SugawaraOperator t1 = sugawara(m, 1);
  for (int d = 1; d <= 8; ++d) {
    SparseMatrix lhs = t1.at(d) * t0.at(d) - t0.at(d - 1) * t1.at(d);
    CHECK(lhs == t1.at(d).scaled(Rational(-1)));
  }
}

TEST_CASE("affine Virasoro central scalar at sl2 level 1") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule m = vacuum_sl2(1, 4, alg);
  CHECK(virasoro_central_scalar(m) == Rational(1));  // 1*3/(1+2)
  VirasoroReport r = virasoro_check(m, 3, 4);
  CHECK(r.ok());
  CHECK(r.max_residual.is_zero());
}

TEST_CASE("Sugawara modes act on monomials by coefficientwise derivation") {
  // On the vacuum Fock module, T(D_k) replaces one factor t^-m by
  // D_k(t^-m) = -m t^{k-m} at a time; factors pushed to t^0 die with the
  // vacuum quotient.
  GradedAffineModule m = oscillator(6);
  auto index_of = [&](int deg, const std::vector<int>& part) {
    const auto& list = m.partitions[static_cast<std::size_t>(deg)];
    return static_cast<std::size_t>(
        std::find(list.begin(), list.end(), part) - list.begin());
  };
  // |k| = 1 keeps every replaced factor a creation operator (or t^0, which
  // the vacuum quotient kills), so the derivation formula is literal.
  for (int k : {1, -1}) {
    SugawaraOperator tk = sugawara(m, k);
    for (int d = std::max(0, k); d <= 6 && d - k <= 6; ++d) {
      const auto& parts = m.partitions[static_cast<std::size_t>(d)];
      for (std::size_t u = 0; u < parts.size(); ++u) {
        Vec expect(m.dims[static_cast<std::size_t>(d - k)]);
        for (std::size_t i = 0; i < parts[u].size(); ++i) {
          int mm = parts[u][i];
          if (mm - k < 1) continue;
          std::vector<int> q = parts[u];
          q[i] = mm - k;
          std::sort(q.rbegin(), q.rend());
          expect[index_of(d - k, q)] += Rational(-mm);
        }
        CHECK(tk.at(d).column(u) == expect);
      }
    }
  }
}

TEST_CASE("normal ordering differs from the plain product by the central scalar") {
  GradedAffineModule m = oscillator(8);
  for (int k = 1; k <= 3; ++k)
    for (int d = k; d + k <= 8; ++d) {
      SparseMatrix ordered = m.action(0, -k, d - k) * m.action(0, k, d);
      SparseMatrix reversed = m.action(0, k, d + k) * m.action(0, -k, d);
      CHECK(reversed - ordered ==
            SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)]).scaled(Rational(k)));
    }
}

TEST_CASE("derivation property of the Sugawara operators") {
  GradedAffineModule osc = oscillator(6);
  DerivationReport r = derivation_property_check(osc, 2, 2);
  CHECK(r.ok());

  // oscillator, k = 0, f = t^-1: [T_0, t^-1] = -(t^-1)
  SugawaraOperator t0 = sugawara(osc, 0);
  for (int d = 0; d < 6; ++d) {
    SparseMatrix lhs = t0.at(d + 1) * osc.action(0, -1, d) -
                       osc.action(0, -1, d) * t0.at(d);
    CHECK(lhs == osc.action(0, -1, d).scaled(Rational(-1)));
  }

  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule m = vacuum_sl2(1, 4, alg);
  DerivationReport ra = derivation_property_check(m, 2, 2);
  CHECK(ra.ok());

  // affine, k = 1, X t^-1: [T_1, X t^-1] = -(X t^0)
  SugawaraOperator t1 = sugawara(m, 1);
  for (std::size_t b = 0; b < alg.dim; ++b)
    for (int d = 1; d + 1 <= 4; ++d) {
      SparseMatrix lhs =
          t1.at(d + 1) * m.action(b, -1, d) - m.action(b, -1, d - 1) * t1.at(d);
      CHECK(lhs == m.action(b, 0, d).scaled(Rational(-1)));
    }

  // constant f = t^0 commutes with every T(D_k) in window
  SugawaraOperator t2 = sugawara(m, 2);
  for (std::size_t b = 0; b < alg.dim; ++b)
    for (int d = 2; d <= 4; ++d)
      CHECK(t2.at(d) * m.action(b, 0, d) == m.action(b, 0, d - 2) * t2.at(d));
}

TEST_CASE("contravariant pairing between dual modules") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  GradedAffineModule plus = build_module(Mode::affine, &alg, {0}, 1, 3);
  GradedAffineModule minus = build_module(Mode::affine, &alg, {0}, 1, 3);

  SparseMatrix p0 = contravariant_pairing(plus, minus, 0, 0);
  CHECK(p0 == SparseMatrix::identity(1));

  SparseMatrix p1 = contravariant_pairing(plus, minus, 1, 1);
  CHECK(p1.rows() == 3);
  CHECK(rank(p1) == 3);

  // adjointness as a matrix identity for both signs of the exponent:
  // b(X t_+^k u, u') + b(u, X t_-^{-k} u') = 0
  for (int k : {1, 2, -1, -2})
    for (int d = 0; d <= 3; ++d) {
      if (d + k < 0 || d + k > 3) continue;
      SparseMatrix pd = contravariant_pairing(plus, minus, d, d);
      SparseMatrix pdk = contravariant_pairing(plus, minus, d + k, d + k);
      for (std::size_t b = 0; b < alg.dim; ++b) {
        SparseMatrix a = plus.action(b, k, d + k);
        SparseMatrix bm = minus.action(b, -k, d);
        CHECK((a.transposed() * pd + pdk * bm).is_zero());
      }
    }

  // cross-degree blocks vanish
  for (int d = 0; d <= 3; ++d)
    for (int e = 0; e <= 3; ++e) {
      if (d == e) continue;
      CHECK(contravariant_pairing(plus, minus, d, e).is_zero());
    }
}

TEST_CASE("epsilon tensor: inverse pairing, invariance, Sugawara eigenvalue") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  for (long w : {0L, 1L}) {
    lie::Weight lam{w};
    GradedAffineModule plus = build_module(Mode::affine, &alg, lam, 1, 3);
    GradedAffineModule minus =
        build_module(Mode::affine, &alg, lie::dualize(alg, lam), 1, 3);
    EpsilonTensor eps = epsilon_tensor(plus, minus);

    if (w == 0) CHECK(eps.per_degree[0] == SparseMatrix::identity(1));

    // every mode, zero and both signs included: the k = 0 case is the
    // diagonal invariance of the gluing tensor
    for (std::size_t b = 0; b < alg.dim; ++b)
      for (int k = -3; k <= 3; ++k)
        for (int d = 0; d <= 3; ++d) {
          if (d + k < 0 || d + k > 3) continue;
          CHECK(epsilon_invariance_residual(plus, minus, eps, b, k, d).is_zero());
        }

    // eigenvalue -d - c(lambda)/(2(l+h)) on the first slot
    Rational h = plus.bottom->casimir_scalar / Rational(6);  // 2(1+2) = 6
    SugawaraOperator t0 = sugawara(plus, 0);
    for (int d = 0; d <= 3; ++d) {
      const SparseMatrix& e = eps.per_degree[static_cast<std::size_t>(d)];
      CHECK(t0.at(d) * e == e.scaled(Rational(-d) - h));
    }
    if (w == 1) CHECK(Rational(-1) - h == Rational(-5, 4));
  }
}

TEST_CASE("node function expansion") {
  using Coeffs = std::map<std::pair<int, int>, Rational>;

  // t+ t- -> (tau, tau)
  NodeExpansion e1 = expand_node_function(Coeffs{{{1, 1}, Rational(1)}}, 3);
  REQUIRE(e1.plus_coeff(0) != nullptr);
  CHECK(e1.plus_coeff(0)->coeff(1) == Rational(1));
  REQUIRE(e1.minus_coeff(0) != nullptr);
  CHECK(e1.minus_coeff(0)->coeff(1) == Rational(1));
  CHECK(e1.plus_side.size() == 1);

  // t+ -> (t+, t-^-1 tau)
  NodeExpansion e2 = expand_node_function(Coeffs{{{1, 0}, Rational(1)}}, 3);
  REQUIRE(e2.plus_coeff(1) != nullptr);
  CHECK(e2.plus_coeff(1)->coeff(0) == Rational(1));
  REQUIRE(e2.minus_coeff(-1) != nullptr);
  CHECK(e2.minus_coeff(-1)->coeff(1) == Rational(1));

  // t+^2 t- -> (t+ tau, t-^-1 tau^2)
  NodeExpansion e3 = expand_node_function(Coeffs{{{2, 1}, Rational(1)}}, 3);
  REQUIRE(e3.plus_coeff(1) != nullptr);
  CHECK(e3.plus_coeff(1)->coeff(1) == Rational(1));
  REQUIRE(e3.minus_coeff(-1) != nullptr);
  CHECK(e3.minus_coeff(-1)->coeff(2) == Rational(1));

  // truncation drops tau^4 and linearity combines coefficients
  NodeExpansion e4 = expand_node_function(
      Coeffs{{{4, 4}, Rational(1)}, {{1, 1}, Rational(2)}, {{0, 0}, Rational(5)}}, 3);
  REQUIRE(e4.plus_coeff(0) != nullptr);
  CHECK(e4.plus_coeff(0)->coeff(0) == Rational(5));
  CHECK(e4.plus_coeff(0)->coeff(1) == Rational(2));
  CHECK(e4.plus_coeff(0)->coeff(3) == Rational(0));
}
