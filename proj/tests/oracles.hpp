// Test-side oracles, deliberately independent of the library's linear
// algebra and construction paths: dense elimination over plain vectors,
// closed-form dimension and Casimir values from root combinatorics, and
// partition enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "wzw/rational.hpp"

namespace oracles {

using wzw::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline std::size_t dense_rank(Dense m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = m[r][c].reciprocal();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<int>> partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

/// Weyl dimension formula for sl_n from the positive roots alone:
/// product over i < j of (a_i + ... + a_{j-1} + j - i) / (j - i).
inline long weyl_dim_sl(std::size_t n, const std::vector<long>& fund) {
  Rational dim(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      long s = 0;
      for (std::size_t k = i; k < j; ++k) s += fund[k];
      dim *= Rational(s + static_cast<long>(j - i), static_cast<long>(j - i));
    }
  }
  return dim.to_long();
}

/// Casimir scalar (lambda | lambda + 2 rho) for sl_n with the trace form.
inline Rational casimir_sl(std::size_t n, const std::vector<long>& fund) {
  // weight in eps coordinates: omega_k = e_1 + ... + e_k - (k/n) * ones
  auto eps_coords = [&](const std::vector<long>& f) {
    std::vector<Rational> c(n);
    for (std::size_t k = 1; k < n; ++k) {
      long fk = f[k - 1];
      if (fk == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        Rational base = i < k ? Rational(1) : Rational(0);
        c[i] += Rational(fk) * (base - Rational(static_cast<long>(k), static_cast<long>(n)));
      }
    }
    return c;
  };
  auto dot = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<long> rho_f(n - 1, 1);
  auto lam = eps_coords(fund);
  auto rho = eps_coords(rho_f);
  Rational two(2);
  return dot(lam, lam) + two * dot(lam, rho);
}

inline std::vector<Rational> distinct_rationals(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r(num(rng), den(rng));
    bool fresh = true;
    for (const auto& p : out)
      if (p == r) fresh = false;
    if (fresh) out.push_back(r);
  }
  return out;
}

}  // namespace oracles
