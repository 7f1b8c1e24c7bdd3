#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wzw/fusion.hpp"
#include "wzw/monodromy.hpp"

using namespace wzw;
using namespace wzw::fusion;

namespace {

std::vector<blocks::Insertion> canonical(const std::vector<lie::Weight>& ws) {
  std::vector<blocks::Insertion> ins;
  for (std::size_t i = 0; i < ws.size(); ++i)
    ins.push_back({Rational((long)i), ws[i]});
  return ins;
}

std::vector<std::vector<std::size_t>> multisets(std::size_t count, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < count; ++i) {
      cur.push_back(i);
      self(self, i, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace

TEST_CASE("fusion coefficients of sl2 at levels 1 and 2") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  FusionRing r1 = fusion_ring(alg, 1);
  std::size_t z = r1.label_index({0}), o = r1.label_index({1});
  CHECK(r1.n(o, o, z) == 1);
  CHECK(r1.n(o, o, o) == 0);
  CHECK(r1.n(z, o, o) == 1);
  CHECK(r1.n(z, z, z) == 1);

  FusionRing r2 = fusion_ring(alg, 2);
  std::size_t z2 = r2.label_index({0}), o2 = r2.label_index({1}),
              t2 = r2.label_index({2});
  CHECK(r2.n(o2, o2, t2) == 1);
  CHECK(r2.n(o2, o2, z2) == 1);
  CHECK(r2.n(o2, o2, o2) == 0);
  CHECK(r2.n(t2, t2, z2) == 1);
  CHECK(r2.n(t2, t2, t2) == 0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(r2.n(z2, a, b) == (a == b ? 1 : 0));
}

TEST_CASE("fusion ring symmetries and associativity") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  FusionRing ring = fusion_ring(alg, 2);
  const std::size_t n = ring.labels.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        CHECK(ring.n(a, b, c) == ring.n(b, a, c));
        // N_{abc} := N_{ab}^{c*} is fully symmetric
        long nabc = ring.n(a, b, ring.dual_index(c));
        CHECK(nabc == ring.n(b, c, ring.dual_index(a)));
        CHECK(nabc == ring.n(a, c, ring.dual_index(b)));
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          long lhs = 0, rhs = 0;
          for (std::size_t s = 0; s < n; ++s) {
            lhs += ring.n(a, b, s) * ring.n(s, c, d);
            rhs += ring.n(b, c, s) * ring.n(a, s, d);
          }
          CHECK(lhs == rhs);
        }
}

TEST_CASE("Verlinde dimensions at genus zero match direct block computations") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  for (long ell : {1L, 2L}) {
    FusionRing ring = fusion_ring(alg, ell);
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const auto& idx : multisets(ring.labels.size(), n)) {
        std::vector<lie::Weight> ws;
        for (std::size_t i : idx) ws.push_back(ring.labels[i]);
        long direct = (long)blocks::block(alg, ell, canonical(ws)).dimension();
        CHECK(verlinde_dim(ring, 0, ws) == direct);
        // decomposition-order independence: two other orders
        std::vector<lie::Weight> rotated = ws, reversed = ws;
        if (!rotated.empty())
          std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        std::reverse(reversed.begin(), reversed.end());
        CHECK(verlinde_dim(ring, 0, rotated) == direct);
        CHECK(verlinde_dim(ring, 0, reversed) == direct);
      }
    }
  }
}

TEST_CASE("Verlinde dimensions at higher genus") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  FusionRing r1 = fusion_ring(alg, 1);
  CHECK(verlinde_dim(r1, 0, {{0}}) == 1);
  CHECK(verlinde_dim(r1, 0, {{1}, {1}, {1}, {1}}) == 1);
  CHECK(verlinde_dim(r1, 1, {}) == 2);  // = |P_1|
  // genus 1 with no labels counts the labels at any level
  FusionRing r2 = fusion_ring(alg, 2);
  CHECK(verlinde_dim(r2, 1, {}) == 3);
  // genus 2 vacuum for sl2 level 1: sum over two handles
  long g2 = verlinde_dim(r1, 2, {});
  long direct = 0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      std::vector<lie::Weight> ws{r1.labels[a],
                                  lie::dualize(alg, r1.labels[a]),
                                  r1.labels[b],
                                  lie::dualize(alg, r1.labels[b])};
      direct += (long)blocks::block(alg, 1, canonical(ws)).dimension();
    }
  CHECK(g2 == direct);
}

TEST_CASE("factorization over all small multisets and splits") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  // the two worked examples
  {
    auto r = factorization_check(alg, 1, {{1}, {1}, {1}, {1}},
                                 {true, true, false, false});
    CHECK(r.ok());
    CHECK(r.total_dim == 1);
    REQUIRE(r.channels.size() == 2);
    CHECK(r.channels[0].left_dim * r.channels[0].right_dim == 1);  // mu = (0)
    CHECK(r.channels[1].left_dim * r.channels[1].right_dim == 0);  // mu = (1)
  }
  {
    auto r = factorization_check(alg, 2, {{1}, {1}, {1}, {1}},
                                 {true, true, false, false});
    CHECK(r.ok());
    CHECK(r.total_dim == 2);
    long sum = 0;
    for (const auto& ch : r.channels) sum += (long)(ch.left_dim * ch.right_dim);
    CHECK(sum == 2);
  }
  // exhaustive
  for (long ell : {1L, 2L}) {
    auto p = lie::enumerate_P_ell(alg, ell);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const auto& idx : multisets(p.size(), n)) {
        std::vector<lie::Weight> ws;
        for (std::size_t i : idx) ws.push_back(p[i]);
        for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
          std::vector<bool> in_first;
          for (std::size_t i = 0; i < n; ++i) in_first.push_back((mask >> i) & 1u);
          CHECK(factorization_check(alg, ell, ws, in_first).ok());
        }
      }
    }
  }
  CHECK_THROWS_AS(
      factorization_check(alg, 1, {{1}, {1}}, std::vector<bool>{true, true}),
      std::invalid_argument);
}

TEST_CASE("splitting off a trivial label reduces to propagation") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  std::vector<lie::Weight> ws{{0}, {1}, {1}};
  auto r = factorization_check(alg, 1, ws, {true, false, false});
  CHECK(r.ok());
  // only the vacuum channel contributes on the singleton side
  for (const auto& ch : r.channels) {
    if (ch.channel == lie::Weight{0})
      CHECK(ch.left_dim == 1);
    else
      CHECK(ch.left_dim * ch.right_dim == 0);
  }
}

TEST_CASE("monodromy exponents and orders") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  auto m1 = monodromy(alg, 1, {1});
  CHECK(m1.exponent == Rational(1, 2));
  CHECK(m1.order == 4);

  auto m0 = monodromy(alg, 1, {0});
  CHECK(m0.exponent == Rational(0));
  CHECK(m0.order == 1);

  auto m2 = monodromy(alg, 2, {2});
  CHECK(m2.exponent == Rational(1));
  CHECK(m2.order == 2);

  CHECK_THROWS_AS(monodromy(alg, 1, {2}), std::invalid_argument);

  for (long ell : {1L, 2L})
    for (const auto& w : lie::enumerate_P_ell(alg, ell)) {
      auto md = monodromy(alg, ell, w);
      auto dual = monodromy(alg, ell, lie::dualize(alg, w));
      CHECK(md.exponent == dual.exponent);
      CHECK(md.order >= 1);
      // n r is an even integer at the order and at no smaller n
      auto even_integer = [&](unsigned long n) {
        Rational nr = Rational((long)n) * md.exponent;
        return nr.is_integer() && mpz_class(nr.num() % 2) == 0;
      };
      CHECK(even_integer(md.order));
      for (unsigned long n = 1; n < md.order; ++n) CHECK_FALSE(even_integer(n));
    }
}

TEST_CASE("degeneration operator eigenvalue per degree") {
  auto alg = lie::build_algebra(lie::AlgebraName::sl2);
  // lambda = (0): scalar 0, epsilon is T-flat up to the -d shift
  auto r0 = degeneration_operator_check(alg, 1, {0}, 3);
  CHECK(r0.ok());
  CHECK(r0.expected_scalar == Rational(0));
  CHECK(r0.degrees_checked == 4);

  auto r1 = degeneration_operator_check(alg, 1, {1}, 3);
  CHECK(r1.ok());
  CHECK(r1.expected_scalar == Rational(-1, 4));
}
