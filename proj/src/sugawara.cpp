#include "wzw/sugawara.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace wzw::affine {

namespace {

int floor_div2(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

Rational sugawara_normalization(const GradedAffineModule& m) {
  if (m.mode == Mode::oscillator) return Rational(-1);  // -1/hbar at hbar = 1
  return Rational(-1) / (Rational(m.level) + m.algebra->dual_coxeter);
}

}  // namespace

SugawaraOperator sugawara(const GradedAffineModule& m, int k) {
  if (k < -m.depth || k > m.depth)
    throw std::invalid_argument("sugawara: |k| exceeds the truncation depth");

  // Dual pairs (X_a, X^a); the oscillator has the single self-dual generator.
  std::vector<std::pair<Vec, Vec>> pairs;
  if (m.mode == Mode::oscillator)
    pairs.emplace_back(Vec{Rational(1)}, Vec{Rational(1)});
  else
    pairs = m.algebra->dual_pairs;

  const Rational norm = sugawara_normalization(m);
  const Rational half(1, 2);

  SugawaraOperator op;
  op.module = &m;
  op.mode = k;
  op.per_degree.assign(static_cast<std::size_t>(m.depth) + 1, std::nullopt);

  for (int d = 0; d <= m.depth; ++d) {
    const int target = d - k;
    if (target > m.depth) continue;  // leaves the window: unknown under truncation
    if (target < 0) {
      // Every normal-ordered term ends in a mode that annihilates this far
      // down, so the operator is genuinely zero here.
      op.per_degree[static_cast<std::size_t>(d)] =
          SparseMatrix(0, m.dims[static_cast<std::size_t>(d)]);
      continue;
    }
    SparseMatrix acc(m.dims[static_cast<std::size_t>(target)],
                     m.dims[static_cast<std::size_t>(d)]);
    // C(D_k) = 1/2 sum_{a,l} :X_a t^{k-l} o X^a t^l: ; keeping the factor
    // with the larger exponent acting first leaves l > k/2 with weight 1 and
    // the symmetric l = k/2 term with weight 1/2. Terms with l > d kill every
    // degree-d vector outright.
    int l0 = (k % 2 == 0) ? k / 2 : floor_div2(k) + 1;
    for (int l = l0; l <= d; ++l) {
      const Rational coeff = (2 * l == k) ? half : Rational(1);
      for (const auto& [x, y] : pairs) {
        SparseMatrix first = m.action_of(y, l, d);           // d -> d-l
        SparseMatrix second = m.action_of(x, k - l, d - l);  // d-l -> d-k
        acc = acc + (second * first).scaled(coeff);
      }
    }
    op.per_degree[static_cast<std::size_t>(d)] = acc.scaled(norm);
  }
  return op;
}

Rational virasoro_central_scalar(const GradedAffineModule& m) {
  if (m.mode == Mode::oscillator) return Rational(1);
  return Rational(m.level) * Rational(static_cast<long>(m.algebra->dim)) /
         (Rational(m.level) + m.algebra->dual_coxeter);
}

VirasoroReport virasoro_check(const GradedAffineModule& m, int max_mode, int window) {
  if (window > m.depth)
    throw std::invalid_argument("virasoro_check: window exceeds module depth");

  // Modes beyond the depth act nowhere inside the window, so they are not
  // needed: the in-window degree condition already excludes them.
  std::map<int, SugawaraOperator> ops;
  for (int k = -2 * max_mode; k <= 2 * max_mode; ++k)
    if (std::abs(k) <= m.depth) ops.emplace(k, sugawara(m, k));

  const Rational z = virasoro_central_scalar(m);
  VirasoroReport report;
  report.max_mode = max_mode;
  report.window = window;

  for (int k = -max_mode; k <= max_mode; ++k) {
    for (int l = -max_mode; l <= max_mode; ++l) {
      if (std::abs(k) > m.depth || std::abs(l) > m.depth || std::abs(k + l) > m.depth)
        continue;
      const SugawaraOperator& tk = ops.at(k);
      const SugawaraOperator& tl = ops.at(l);
      const SugawaraOperator& tkl = ops.at(k + l);
      for (int d = 0; d <= window; ++d) {
        if (d - k < 0 || d - k > window || d - l < 0 || d - l > window ||
            d - k - l < 0 || d - k - l > window)
          continue;
        SparseMatrix lhs = tk.at(d - l) * tl.at(d) - tl.at(d - k) * tk.at(d);
        SparseMatrix rhs = tkl.at(d).scaled(Rational(l - k));
        if (k + l == 0) {
          Rational central = Rational(static_cast<long>(k) * k * k - k, 12) * z;
          rhs = rhs + SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)])
                          .scaled(central);
        }
        SparseMatrix res = lhs - rhs;
        ++report.triples_checked;
        Rational mx = res.max_abs();
        if (mx > report.max_residual) report.max_residual = mx;
        if (!res.is_zero()) report.failures.push_back({k, l, d, mx});
      }
    }
  }
  return report;
}

DerivationReport derivation_property_check(const GradedAffineModule& m, int max_mode,
                                           int max_exponent) {
  std::map<int, SugawaraOperator> ops;
  for (int k = -max_mode; k <= max_mode; ++k)
    if (std::abs(k) <= m.depth) ops.emplace(k, sugawara(m, k));

  DerivationReport report;
  const std::size_t gens = m.generator_count();
  for (int k = -max_mode; k <= max_mode; ++k) {
    if (std::abs(k) > m.depth) continue;
    const SugawaraOperator& tk = ops.at(k);
    for (int f = -max_exponent; f <= max_exponent; ++f) {
      for (std::size_t b = 0; b < gens; ++b) {
        for (int d = 0; d <= m.depth; ++d) {
          if (!m.in_window(d - k) || !m.in_window(d - f) || !m.in_window(d - k - f))
            continue;
          // [T(D_k), X t^f] = f X t^{k+f}
          SparseMatrix lhs = tk.at(d - f) * m.action(b, f, d) -
                             m.action(b, f, d - k) * tk.at(d);
          SparseMatrix rhs = m.action(b, k + f, d).scaled(Rational(f));
          SparseMatrix res = lhs - rhs;
          ++report.checked;
          Rational mx = res.max_abs();
          if (mx > report.max_residual) report.max_residual = mx;
        }
      }
    }
  }
  return report;
}

}  // namespace wzw::affine
