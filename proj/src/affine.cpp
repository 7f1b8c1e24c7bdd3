#include "wzw/affine.hpp"

#include <algorithm>
#include <stdexcept>

#include "wzw/linalg.hpp"

namespace wzw::affine {

namespace {

std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

std::size_t find_partition(const std::vector<std::vector<int>>& list,
                           const std::vector<int>& p) {
  auto it = std::find(list.begin(), list.end(), p);
  if (it == list.end()) throw std::logic_error("partition lookup failed");
  return static_cast<std::size_t>(it - list.begin());
}

void build_oscillator(GradedAffineModule& m) {
  const int D = m.depth;
  for (int d = 0; d <= D; ++d) {
    m.partitions.push_back(partitions_of(d));
    m.dims.push_back(m.partitions.back().size());
  }

  // act_[0][k + D][d]: t^k from degree d to d - k.
  m.act_.assign(1, std::vector<std::vector<SparseMatrix>>(
                       2 * D + 1, std::vector<SparseMatrix>(D + 1)));
  for (int k = -D; k <= D; ++k) {
    for (int d = 0; d <= D; ++d) {
      int target = d - k;
      if (target < 0 || target > D) continue;
      SparseMatrix mat(m.dims[target], m.dims[d]);
      const auto& src = m.partitions[d];
      const auto& dst = m.partitions[target];
      for (std::size_t u = 0; u < src.size(); ++u) {
        if (k == 0) continue;  // t^0 kills the vacuum module
        if (k < 0) {
          // creation: insert a part of size -k
          std::vector<int> p = src[u];
          p.push_back(-k);
          std::sort(p.rbegin(), p.rend());
          mat.add_at(find_partition(dst, p), u, Rational(1));
        } else {
          // annihilation: [t^k, t^-k] = k at hbar = 1
          const auto& p = src[u];
          for (std::size_t pos = 0; pos < p.size(); ++pos) {
            if (p[pos] != k) continue;
            std::vector<int> q = p;
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(pos));
            mat.add_at(find_partition(dst, q), u, Rational(k));
          }
        }
      }
      m.act_[0][static_cast<std::size_t>(k + D)][static_cast<std::size_t>(d)] =
          std::move(mat);
    }
  }

  // Gram by peeling the largest part: <t^-k x, y> = <x, t^k y>.
  m.gram.push_back(SparseMatrix::identity(1));
  for (int d = 1; d <= D; ++d) {
    const auto& parts = m.partitions[d];
    SparseMatrix g(m.dims[d], m.dims[d]);
    for (std::size_t u = 0; u < parts.size(); ++u) {
      int k = parts[u][0];
      std::vector<int> rest(parts[u].begin() + 1, parts[u].end());
      std::size_t u_rest = find_partition(m.partitions[d - k], rest);
      const SparseMatrix& ann = m.act_[0][static_cast<std::size_t>(k + D)]
                                        [static_cast<std::size_t>(d)];
      for (std::size_t v = 0; v < parts.size(); ++v) {
        Rational s;
        Vec w = ann.column(v);
        for (std::size_t j = 0; j < w.size(); ++j)
          if (!w[j].is_zero()) s += m.gram[d - k].at(u_rest, j) * w[j];
        if (!s.is_zero()) g.set(u, v, s);
      }
    }
    m.gram.push_back(std::move(g));
  }
}

void build_affine(GradedAffineModule& m, const lie::Weight& lambda) {
  const lie::SimpleLieAlgebra& alg = *m.algebra;
  const int D = m.depth;
  const std::size_t dg = alg.dim;

  m.bottom = lie::build_irrep(alg, lambda);
  const lie::FiniteIrrep& V = *m.bottom;

  m.dims.push_back(V.dimension);
  m.gram.push_back(V.gram);
  m.provenance.assign(static_cast<std::size_t>(D) + 1, {});

  // Per-degree blocks built along the way:
  //   lower1[b][d]: X_b t^-1 from degree d to d+1
  //   raise1[b][d]: X_b t^+1 from degree d to d-1
  //   zero[b][d]:   X_b t^0 on degree d
  std::vector<std::vector<SparseMatrix>> lower1(dg), raise1(dg), zero(dg);
  for (std::size_t b = 0; b < dg; ++b) {
    raise1[b].push_back(SparseMatrix(0, V.dimension));
    zero[b].push_back(V.action[b]);
  }

  // sum_c coords[c] * table[c][deg]
  auto combo = [&](const std::vector<std::vector<SparseMatrix>>& table, int deg,
                   const Vec& coords, Index rows, Index cols) {
    SparseMatrix r(rows, cols);
    for (std::size_t b = 0; b < dg; ++b)
      if (!coords[b].is_zero())
        r = r + table[b][static_cast<std::size_t>(deg)].scaled(coords[b]);
    return r;
  };

  const Rational ell(m.level);
  for (int d = 1; d <= D; ++d) {
    const std::size_t np = m.dims[static_cast<std::size_t>(d - 1)];
    const std::size_t ncand = dg * np;
    const SparseMatrix& gprev = m.gram[static_cast<std::size_t>(d - 1)];

    // <(X_b t^-1)u, (X_b' t^-1)u'> =
    //   <u, ([omega(X_b), X_b'] t^0) u'> + ell (omega(X_b)|X_b') <u,u'>
    //   + <u, (X_b' t^-1)(omega(X_b) t^+1) u'>
    SparseMatrix gc(ncand, ncand);
    for (std::size_t b = 0; b < dg; ++b) {
      const std::size_t wb = alg.omega(b);
      for (std::size_t bp = 0; bp < dg; ++bp) {
        SparseMatrix t = combo(zero, d - 1, alg.bracket(wb, bp), np, np);
        const Rational& pairing = alg.invariant_form.at(wb, bp);
        if (!pairing.is_zero())
          t = t + SparseMatrix::identity(np).scaled(ell * pairing);
        if (d >= 2)
          t = t + lower1[bp][static_cast<std::size_t>(d - 2)] *
                      raise1[wb][static_cast<std::size_t>(d - 1)];
        SparseMatrix block = gprev * t;
        for (std::size_t u = 0; u < np; ++u)
          for (const auto& [up, v] : block.row(u)) gc.set(b * np + u, bp * np + up, v);
      }
    }

    Echelon ech = reduced_row_echelon(gc);
    const std::size_t nd = ech.rank();
    m.dims.push_back(nd);
    const std::vector<Index>& sel = ech.pivot_cols;
    for (Index c : sel)
      m.provenance[static_cast<std::size_t>(d)].emplace_back(c / np, c % np);

    SparseMatrix gnew(nd, nd);
    for (std::size_t a = 0; a < nd; ++a)
      for (std::size_t b2 = 0; b2 < nd; ++b2) gnew.set(a, b2, gc.at(sel[a], sel[b2]));
    m.gram.push_back(gnew);

    SparseMatrix expand(nd, ncand);
    if (nd > 0) {
      SparseMatrix rhs(nd, ncand);
      for (std::size_t a = 0; a < nd; ++a)
        for (const auto& [c, v] : gc.row(sel[a])) rhs.set(a, c, v);
      expand = solve(gnew, rhs);
    }

    for (std::size_t b = 0; b < dg; ++b) {
      SparseMatrix lb(nd, np);
      for (std::size_t u = 0; u < np; ++u) lb.set_column(u, expand.column(b * np + u));
      lower1[b].push_back(std::move(lb));
    }

    // Raising and zero modes on the new basis via the bracket with the
    // provenance generator:
    //   (X_b t^+1)(X_a t^-1)u = ([X_b,X_a] t^0) u + ell (X_b|X_a) u
    //                           + (X_a t^-1)(X_b t^+1) u
    //   (X_b t^0)(X_a t^-1)u  = ([X_b,X_a] t^-1) u + (X_a t^-1)(X_b t^0) u
    for (std::size_t b = 0; b < dg; ++b) {
      SparseMatrix rb(np, nd), zbm(nd, nd);
      for (std::size_t a = 0; a < nd; ++a) {
        auto [gen, u] = m.provenance[static_cast<std::size_t>(d)][a];
        const Vec& br = alg.bracket(b, gen);

        Vec col = combo(zero, d - 1, br, np, np).column(u);
        const Rational& pairing = alg.invariant_form.at(b, gen);
        if (!pairing.is_zero()) col[u] += ell * pairing;
        if (d >= 2) {
          Vec up = raise1[b][static_cast<std::size_t>(d - 1)].column(u);
          col = add(col, lower1[gen][static_cast<std::size_t>(d - 2)].apply(up));
        }
        rb.set_column(a, col);

        Vec zcol = combo(lower1, d - 1, br, nd, np).column(u);
        zcol = add(zcol, lower1[gen][static_cast<std::size_t>(d - 1)].apply(
                             zero[b][static_cast<std::size_t>(d - 1)].column(u)));
        zbm.set_column(a, zcol);
      }
      raise1[b].push_back(std::move(rb));
      zero[b].push_back(std::move(zbm));
    }
  }

  // Assemble the mode table. Modes of size one and zero come from the
  // construction; larger modes via X_b = sum coeff [X_y, X_z].
  m.act_.assign(dg, std::vector<std::vector<SparseMatrix>>(
                        2 * static_cast<std::size_t>(D) + 1,
                        std::vector<SparseMatrix>(static_cast<std::size_t>(D) + 1)));
  auto put = [&](std::size_t b, int k, int d, SparseMatrix mat) {
    m.act_[b][static_cast<std::size_t>(k + D)][static_cast<std::size_t>(d)] =
        std::move(mat);
  };
  for (std::size_t b = 0; b < dg; ++b) {
    for (int d = 0; d <= D; ++d) {
      put(b, 0, d, zero[b][static_cast<std::size_t>(d)]);
      if (d + 1 <= D && D >= 1) put(b, -1, d, lower1[b][static_cast<std::size_t>(d)]);
      if (d - 1 >= 0) put(b, 1, d, raise1[b][static_cast<std::size_t>(d)]);
    }
  }
  for (int k = 2; k <= D; ++k) {
    for (std::size_t b = 0; b < dg; ++b) {
      const auto& terms = alg.bracket_decomposition(b);
      // negative mode -k: d -> d+k
      for (int d = 0; d + k <= D; ++d) {
        SparseMatrix neg(m.dims[static_cast<std::size_t>(d + k)],
                         m.dims[static_cast<std::size_t>(d)]);
        SparseMatrix posm(m.dims[static_cast<std::size_t>(d)],
                          m.dims[static_cast<std::size_t>(d + k)]);
        for (const auto& t : terms) {
          neg = neg + (m.action(t.y, -1, d + k - 1) * m.action(t.z, -(k - 1), d) -
                       m.action(t.z, -(k - 1), d + 1) * m.action(t.y, -1, d))
                          .scaled(t.coeff);
          posm = posm + (m.action(t.y, 1, d + 1) * m.action(t.z, k - 1, d + k) -
                         m.action(t.z, k - 1, d + k - 1) * m.action(t.y, 1, d + k))
                            .scaled(t.coeff);
        }
        put(b, -k, d, std::move(neg));
        put(b, k, d + k, std::move(posm));
      }
    }
  }
}

}  // namespace

const SparseMatrix& GradedAffineModule::action(std::size_t b, int k, int d) const {
  if (!in_window(d) || !in_window(d - k))
    throw std::out_of_range("GradedAffineModule::action: degrees out of window");
  return act_[b][static_cast<std::size_t>(k + depth)][static_cast<std::size_t>(d)];
}

SparseMatrix GradedAffineModule::action_of(const Vec& coords, int k, int d) const {
  if (coords.size() != generator_count())
    throw std::invalid_argument("GradedAffineModule::action_of: bad coordinate size");
  if (!in_window(d) || !in_window(d - k))
    throw std::out_of_range("GradedAffineModule::action_of: degrees out of window");
  SparseMatrix r(dims[static_cast<std::size_t>(d - k)], dims[static_cast<std::size_t>(d)]);
  for (std::size_t b = 0; b < coords.size(); ++b)
    if (!coords[b].is_zero()) r = r + action(b, k, d).scaled(coords[b]);
  return r;
}

GradedAffineModule build_module(Mode mode, const lie::SimpleLieAlgebra* alg,
                                const lie::Weight& lambda, long ell, int depth) {
  if (depth < 0) throw std::invalid_argument("build_module: negative depth");
  GradedAffineModule m;
  m.mode = mode;
  m.depth = depth;
  if (mode == Mode::oscillator) {
    m.level = 1;  // hbar
    build_oscillator(m);
    return m;
  }
  if (!alg) throw std::invalid_argument("build_module: affine mode needs an algebra");
  if (ell < 1) throw std::invalid_argument("build_module: level must be positive");
  if (lie::level_of_weight(*alg, lambda) > ell)
    throw std::invalid_argument("build_module: weight " + lie::weight_to_string(lambda) +
                                " has level > " + std::to_string(ell) +
                                "; the module is zero");
  m.algebra = alg;
  m.level = ell;
  build_affine(m, lambda);
  return m;
}

bool GradedVector::is_zero() const {
  for (const auto& c : comp)
    if (!wzw::is_zero(c)) return false;
  return true;
}

GradedVector zero_vector(const GradedAffineModule& m) {
  GradedVector v;
  for (int d = 0; d <= m.depth; ++d)
    v.comp.push_back(zero_vec(m.dims[static_cast<std::size_t>(d)]));
  return v;
}

GradedVector basis_vector(const GradedAffineModule& m, int degree, std::size_t index) {
  GradedVector v = zero_vector(m);
  v.comp.at(static_cast<std::size_t>(degree)).at(index) = Rational(1);
  return v;
}

GradedVector vacuum_vector(const GradedAffineModule& m) { return basis_vector(m, 0, 0); }

GradedVector loop_act(const GradedAffineModule& m, const LoopElement& x,
                      const GradedVector& v) {
  GradedVector r = zero_vector(m);
  r.truncated = v.truncated;
  if (x.central) {
    for (std::size_t d = 0; d < r.comp.size(); ++d)
      r.comp[d] = scale(v.comp[d], m.central_scalar());
    return r;
  }
  for (int d = 0; d <= m.depth; ++d) {
    const Vec& src = v.comp[static_cast<std::size_t>(d)];
    if (wzw::is_zero(src)) continue;
    int target = d - x.exponent;
    if (target < 0) continue;  // annihilated below the bottom: genuinely zero
    if (target > m.depth) {
      r.truncated = true;  // pushed out of the window
      continue;
    }
    Vec img = m.action_of(x.coords, x.exponent, d).apply(src);
    r.comp[static_cast<std::size_t>(target)] =
        add(r.comp[static_cast<std::size_t>(target)], img);
  }
  return r;
}

}  // namespace wzw::affine
