#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wzw/linalg.hpp"
#include "wzw/series.hpp"

using namespace wzw;

TEST_CASE("Rational canonical form") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(6, 3).den() == 1);
  CHECK(Rational(3, 7).den() > 0);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("Rational parsing and arithmetic") {
  CHECK(Rational::from_string("3/6") == Rational(1, 2));
  CHECK(Rational::from_string("-5") == Rational(-5));
  CHECK(Rational::from_string("1/2") + Rational::from_string("1/3") == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 2).reciprocal() == Rational(2, 7));
  CHECK(Rational(-1, 2).abs() == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("SparseMatrix stores no zeros") {
  SparseMatrix m(3, 3);
  m.set(0, 0, Rational(2));
  m.set(0, 0, Rational(0));
  CHECK(m.nnz() == 0);
  m.add_at(1, 2, Rational(5));
  m.add_at(1, 2, Rational(-5));
  CHECK(m.nnz() == 0);
  m.set(2, 1, Rational(1, 3));
  CHECK(m.at(2, 1) == Rational(1, 3));
  CHECK(m.at(0, 1).is_zero());
  CHECK_THROWS_AS(m.at(5, 0), std::out_of_range);
}

TEST_CASE("kernel_basis on the stated examples") {
  CHECK(kernel_basis(SparseMatrix::identity(2)).empty());

  SparseMatrix row(1, 2);
  row.set(0, 0, Rational(1));
  row.set(0, 1, Rational(1));
  auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  // spans (1, -1); the free coordinate carries the 1
  CHECK(k[0] == Vec{Rational(-1), Rational(1)});
  CHECK(k[0][0] * Rational(-1) == k[0][1]);
}

TEST_CASE("kernel of a random rank-3 6x4 matrix") {
  // Random 6x3 times 3x4 with independent rank verification.
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coef(-4, 4);
  SparseMatrix a(6, 3), b(3, 4);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 3; ++j) a.set(i, j, Rational(coef(rng)));
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 4; ++j) b.set(i, j, Rational(coef(rng)));
  SparseMatrix m = a * b;

  oracles::Dense dense(6, std::vector<Rational>(4));
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 4; ++j) dense[i][j] = m.at(i, j);
  REQUIRE(oracles::dense_rank(dense) == 3);

  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m.apply(k[0])));
}

TEST_CASE("kernel + rank = columns, deterministic") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<Index> size(1, 7);
  for (int trial = 0; trial < 25; ++trial) {
    Index r = size(rng), c = size(rng);
    SparseMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m.set(i, j, Rational(coef(rng), 1 + (coef(rng) & 1)));

    oracles::Dense dense(r, std::vector<Rational>(c));
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) dense[i][j] = m.at(i, j);

    auto k = kernel_basis(m);
    CHECK(k.size() + oracles::dense_rank(dense) == c);
    for (const auto& v : k) CHECK(is_zero(m.apply(v)));
    CHECK(kernel_basis(m) == k);  // bit-identical rerun
  }
}

TEST_CASE("image_quotient basics") {
  auto q0 = image_quotient(3, {});
  CHECK(q0.quotient_dim == 3);
  CHECK(q0.projection == SparseMatrix::identity(3));

  auto q1 = image_quotient(2, {unit_vec(2, 0), unit_vec(2, 1)});
  CHECK(q1.quotient_dim == 0);
}

TEST_CASE("image_quotient of a rank-2 span in dim 4") {
  Vec g1{Rational(1), Rational(2), Rational(0), Rational(3)};
  Vec g2{Rational(0), Rational(1), Rational(1), Rational(1)};
  Vec g3 = add(g1, scale(g2, Rational(2)));  // dependent
  auto q = image_quotient(4, {g1, g2, g3});

  oracles::Dense dense{{g1[0], g1[1], g1[2], g1[3]},
                       {g2[0], g2[1], g2[2], g2[3]},
                       {g3[0], g3[1], g3[2], g3[3]}};
  REQUIRE(oracles::dense_rank(dense) == 2);
  CHECK(q.quotient_dim == 2);
  for (const auto& g : {g1, g2, g3}) CHECK(is_zero(q.projection.apply(g)));
  CHECK(q.projection * q.section == SparseMatrix::identity(2));
}

TEST_CASE("image_quotient properties on random generators") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Index ambient = 5;
    std::vector<Vec> gens;
    std::uniform_int_distribution<int> count(0, 6);
    int n = count(rng);
    for (int g = 0; g < n; ++g) {
      Vec v(ambient);
      for (auto& x : v) x = Rational(coef(rng));
      gens.push_back(v);
    }
    auto q = image_quotient(ambient, gens);
    CHECK(q.projection * q.section == SparseMatrix::identity(q.quotient_dim));
    for (const auto& g : gens) CHECK(is_zero(q.projection.apply(g)));

    oracles::Dense dense;
    for (const auto& g : gens) dense.push_back(g);
    CHECK(q.quotient_dim == ambient - oracles::dense_rank(dense));

    // bit-identical rerun
    auto q2 = image_quotient(ambient, gens);
    CHECK(q2.projection == q.projection);
    CHECK(q2.section == q.section);
  }
}

TEST_CASE("solve and inverse") {
  SparseMatrix a(2, 2);
  a.set(0, 0, Rational(2));
  a.set(0, 1, Rational(1));
  a.set(1, 1, Rational(3));
  SparseMatrix inv = inverse(a);
  CHECK(a * inv == SparseMatrix::identity(2));
  CHECK(inv * a == SparseMatrix::identity(2));
  SparseMatrix sing(2, 2);
  sing.set(0, 0, Rational(1));
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("TruncatedSeries arithmetic and truncation") {
  TruncatedSeries one = TruncatedSeries::monomial("tau", 3, 0, Rational(1));
  TruncatedSeries t = TruncatedSeries::monomial("tau", 3, 1, Rational(1));
  auto s = one + t;           // 1 + tau
  auto sq = s * s;            // 1 + 2 tau + tau^2
  CHECK(sq.coeff(0) == Rational(1));
  CHECK(sq.coeff(1) == Rational(2));
  CHECK(sq.coeff(2) == Rational(1));
  CHECK(sq.coeff(3) == Rational(0));
  auto cube = sq * s;
  CHECK(cube.coeff(3) == Rational(1));
  auto quart = cube * s;      // tau^4 term truncated away
  CHECK(quart.order() == 3);
  CHECK(quart.coeff(3) == Rational(4));
  CHECK(TruncatedSeries::monomial("tau", 2, 5, Rational(9)).is_zero());
  CHECK(s.str() == "1 + 1*tau");
}
