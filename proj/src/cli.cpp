#include "wzw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "wzw/affine.hpp"
#include "wzw/blocks.hpp"
#include "wzw/fusion.hpp"
#include "wzw/irrep.hpp"
#include "wzw/json_io.hpp"
#include "wzw/kz.hpp"
#include "wzw/monodromy.hpp"
#include "wzw/pairing.hpp"
#include "wzw/sugawara.hpp"

namespace wzw::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Json weight_json(const lie::Weight& w) {
  Json a = Json::array();
  for (long c : w) a.push_back(c);
  return a;
}

std::vector<Rational> random_distinct_points(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-24, 24);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> pts;
  while (pts.size() < n) {
    Rational r(num(rng), den(rng));
    bool fresh = true;
    for (const auto& p : pts)
      if (p == r) fresh = false;
    if (fresh) pts.push_back(r);
  }
  return pts;
}

std::vector<blocks::Insertion> make_insertions(const std::vector<lie::Weight>& labels,
                                               const std::vector<Rational>& points) {
  if (labels.size() != points.size())
    throw std::invalid_argument("need as many points as labels");
  std::vector<blocks::Insertion> ins;
  for (std::size_t i = 0; i < labels.size(); ++i) ins.push_back({points[i], labels[i]});
  return ins;
}

/// Non-decreasing index tuples: all size-n multisets out of `count` labels.
std::vector<std::vector<std::size_t>> index_multisets(std::size_t count, std::size_t n) {
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

// ---------------------------------------------------------------------------
// verify all
// ---------------------------------------------------------------------------

struct ItemResult {
  std::string name;
  bool ok = false;
  Json details;
};

using Item = std::pair<std::string, std::function<Json(bool&)>>;

ItemResult run_item(const Item& item) {
  ItemResult r;
  r.name = item.first;
  try {
    r.details = item.second(r.ok);
  } catch (const std::exception& e) {
    r.ok = false;
    r.details = Json{{"error", e.what()}};
  }
  return r;
}

Json check_algebra_invariants(const lie::SimpleLieAlgebra& alg, bool& ok) {
  ok = true;
  // invariance (["X,Y"]|Z) + (Y|[X,Z]) = 0 on all basis triples
  for (std::size_t a = 0; a < alg.dim && ok; ++a)
    for (std::size_t b = 0; b < alg.dim && ok; ++b)
      for (std::size_t c = 0; c < alg.dim && ok; ++c) {
        Rational lhs = alg.form(alg.bracket(a, b), unit_vec(alg.dim, c)) +
                       alg.form(unit_vec(alg.dim, b), alg.bracket(a, c));
        if (!lhs.is_zero()) ok = false;
      }
  // dual pairs
  for (std::size_t a = 0; a < alg.dim && ok; ++a)
    for (std::size_t b = 0; b < alg.dim && ok; ++b) {
      Rational v = alg.form(alg.dual_pairs[a].first, alg.dual_pairs[b].second);
      if (v != (a == b ? Rational(1) : Rational(0))) ok = false;
    }
  // (theta | theta) = 2
  if (alg.form(alg.highest_root, alg.highest_root) != Rational(2)) ok = false;
  // sum [X_a, [X^a, Y]] = 2 h-check Y
  for (std::size_t c = 0; c < alg.dim && ok; ++c) {
    Vec y = unit_vec(alg.dim, c);
    Vec acc = zero_vec(alg.dim);
    for (const auto& [x, xd] : alg.dual_pairs)
      acc = add(acc, alg.bracket(x, alg.bracket(xd, y)));
    if (acc != scale(y, Rational(2) * alg.dual_coxeter)) ok = false;
  }
  return Json{{"dimension", alg.dim}, {"dual_coxeter", alg.dual_coxeter.str()}};
}

Json check_irrep_invariants(const lie::SimpleLieAlgebra& alg, long level, bool& ok) {
  ok = true;
  Json list = Json::array();
  for (const auto& w : lie::enumerate_P_ell(alg, level)) {
    lie::FiniteIrrep rep = lie::build_irrep(alg, w);
    bool good = true;
    // bracket relations
    for (std::size_t a = 0; a < alg.dim && good; ++a)
      for (std::size_t b = 0; b < alg.dim && good; ++b) {
        SparseMatrix lhs = rep.action[a] * rep.action[b] - rep.action[b] * rep.action[a];
        if (lhs != rep.action_of(alg.bracket(a, b))) good = false;
      }
    // contravariant form nondegenerate on the retained basis
    if (rank(rep.gram) != rep.dimension) good = false;
    // c(lambda*) = c(lambda)
    lie::FiniteIrrep dual = lie::build_irrep(alg, lie::dualize(alg, w));
    if (dual.casimir_scalar != rep.casimir_scalar) good = false;
    // e_theta^(l+1) = 0, e_theta^l != 0, l = level_of
    SparseMatrix x = rep.action_of(lie::highest_root_vector(alg));
    SparseMatrix p = SparseMatrix::identity(rep.dimension);
    for (long i = 0; i < rep.level; ++i) p = p * x;
    if (rep.level > 0 && p.is_zero()) good = false;
    if (!(p * x).is_zero()) good = false;
    list.push_back(Json{{"weight", weight_json(w)},
                        {"dimension", rep.dimension},
                        {"casimir", rep.casimir_scalar.str()},
                        {"level", rep.level},
                        {"ok", good}});
    ok = ok && good;
  }
  return Json{{"irreps", list}};
}

Json check_p_ell(const lie::SimpleLieAlgebra& alg, long level, bool& ok) {
  ok = true;
  auto p = lie::enumerate_P_ell(alg, level);
  for (const auto& w : p) {
    if (lie::level_of_weight(alg, w) > level) ok = false;
    auto dual = lie::dualize(alg, w);
    if (std::find(p.begin(), p.end(), dual) == p.end()) ok = false;
  }
  // finite scan: membership <=> level bound, coordinates <= 3
  long scan_max = 3;
  std::vector<lie::Weight> all;
  lie::Weight cur(alg.rank_, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == alg.rank_) {
      all.push_back(cur);
      return;
    }
    for (long c = 0; c <= scan_max; ++c) {
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  for (const auto& w : all) {
    bool in = std::find(p.begin(), p.end(), w) != p.end();
    bool should = lie::level_of_weight(alg, w) <= level;
    if (in != should) ok = false;
  }
  return Json{{"size", p.size()}};
}

Json check_casimir_basis_independence(const lie::SimpleLieAlgebra& alg, bool& ok) {
  // Mix two basis directions, recompute dual pairs for the new basis, and
  // compare the Casimir action on the first fundamental irrep.
  const std::size_t dim = alg.dim;
  std::vector<Vec> basis2;
  for (std::size_t a = 0; a < dim; ++a) basis2.push_back(unit_vec(dim, a));
  basis2[0] = add(basis2[0], basis2[1]);
  basis2[1] = scale(basis2[1], Rational(2));
  SparseMatrix gram2(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) gram2.set(a, b, alg.form(basis2[a], basis2[b]));
  SparseMatrix inv2 = inverse(gram2);

  lie::Weight fund(alg.rank_, 0);
  fund[0] = 1;
  lie::FiniteIrrep rep = lie::build_irrep(alg, fund);
  SparseMatrix cas1(rep.dimension, rep.dimension), cas2(rep.dimension, rep.dimension);
  for (const auto& [x, y] : alg.dual_pairs)
    cas1 = cas1 + rep.action_of(x) * rep.action_of(y);
  for (std::size_t a = 0; a < dim; ++a) {
    Vec dual = zero_vec(dim);
    for (std::size_t b = 0; b < dim; ++b)
      dual = add(dual, scale(basis2[b], inv2.at(b, a)));
    cas2 = cas2 + rep.action_of(basis2[a]) * rep.action_of(dual);
  }
  ok = cas1 == cas2;
  return Json{{"casimir", rep.casimir_scalar.str()}};
}

Json virasoro_json(const affine::VirasoroReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures)
    fails.push_back(Json{{"k", f.k}, {"l", f.l}, {"degree", f.degree},
                         {"residual", f.residual.str()}});
  return Json{{"max_mode", r.max_mode},
              {"window", r.window},
              {"triples_checked", r.triples_checked},
              {"max_residual", r.max_residual.str()},
              {"failures", fails},
              {"ok", r.ok()}};
}

Json check_loop_brackets(const affine::GradedAffineModule& m, bool& ok) {
  // [X t^k, Y t^l] = [X,Y] t^{k+l} + k delta_{k+l,0} (X|Y) ell on the window
  ok = true;
  long checked = 0;
  const std::size_t gens = m.generator_count();
  const int kmax = std::min(2, m.depth);
  for (std::size_t a = 0; a < gens; ++a)
    for (std::size_t b = 0; b < gens; ++b)
      for (int k = -kmax; k <= kmax; ++k)
        for (int l = -kmax; l <= kmax; ++l)
          for (int d = 0; d <= m.depth; ++d) {
            if (!m.in_window(d - k) || !m.in_window(d - l) || !m.in_window(d - k - l))
              continue;
            SparseMatrix lhs = m.action(a, k, d - l) * m.action(b, l, d) -
                               m.action(b, l, d - k) * m.action(a, k, d);
            SparseMatrix rhs(m.dims[static_cast<std::size_t>(d - k - l)],
                             m.dims[static_cast<std::size_t>(d)]);
            if (m.mode == affine::Mode::affine) {
              rhs = m.action_of(m.algebra->bracket(unit_vec(gens, a), unit_vec(gens, b)),
                                k + l, d);
            }
            if (k + l == 0) {
              Rational central = Rational(k) * m.central_scalar();
              central = central * (m.mode == affine::Mode::affine
                                       ? m.algebra->invariant_form.at(a, b)
                                       : Rational(1));
              rhs = rhs + SparseMatrix::identity(m.dims[static_cast<std::size_t>(d)])
                              .scaled(central);
            }
            if (lhs != rhs) ok = false;
            ++checked;
          }
  return Json{{"checked", checked}};
}

Json check_pairing_epsilon(const lie::SimpleLieAlgebra& alg, long level, int depth,
                           bool& ok) {
  using namespace affine;
  ok = true;
  Json list = Json::array();
  for (const auto& w : lie::enumerate_P_ell(alg, level)) {
    GradedAffineModule plus = build_module(Mode::affine, &alg, w, level, depth);
    GradedAffineModule minus =
        build_module(Mode::affine, &alg, lie::dualize(alg, w), level, depth);
    bool good = true;
    for (int d = 0; d <= depth; ++d) {
      SparseMatrix p = contravariant_pairing(plus, minus, d, d);
      if (p.rows() != p.cols() || rank(p) != p.rows()) good = false;
    }
    // cross-degree blocks vanish
    for (int d = 0; d <= depth && good; ++d)
      for (int e = 0; e <= depth && good; ++e) {
        if (d == e) continue;
        if (!contravariant_pairing(plus, minus, d, e).is_zero()) good = false;
      }
    EpsilonTensor eps = epsilon_tensor(plus, minus);
    for (std::size_t b = 0; b < alg.dim && good; ++b)
      for (int k = -depth; k <= depth && good; ++k)
        for (int d = 0; d <= depth && good; ++d) {
          if (d + k < 0 || d + k > depth) continue;
          if (!epsilon_invariance_residual(plus, minus, eps, b, k, d).is_zero())
            good = false;
        }
    auto deg = fusion::degeneration_operator_check(alg, level, w, depth);
    if (!deg.ok()) good = false;
    list.push_back(Json{{"weight", weight_json(w)},
                        {"sugawara_scalar", deg.expected_scalar.str()},
                        {"ok", good}});
    ok = ok && good;
  }
  return Json{{"labels", list}};
}

Json check_blocks_family(const lie::SimpleLieAlgebra& alg, long level,
                         std::uint64_t seed, bool& ok) {
  ok = true;
  std::mt19937_64 rng(seed);
  auto p_ell = lie::enumerate_P_ell(alg, level);
  Json cases = Json::array();
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& idx : index_multisets(p_ell.size(), n)) {
      std::vector<lie::Weight> labels;
      std::size_t tensor_dim = 1;
      for (std::size_t i : idx) {
        labels.push_back(p_ell[i]);
        tensor_dim *= lie::build_irrep(alg, p_ell[i]).dimension;
      }
      if (tensor_dim > 600) continue;  // keep the battery quick on big algebras

      // dimension at three random configurations, plus the canonical one
      std::vector<std::size_t> dims;
      std::vector<Rational> canonical;
      for (std::size_t i = 0; i < n; ++i) canonical.push_back(Rational((long)i));
      dims.push_back(
          blocks::block(alg, level, make_insertions(labels, canonical)).dimension());
      for (int rep = 0; rep < 3; ++rep) {
        auto pts = random_distinct_points(n, rng);
        dims.push_back(
            blocks::block(alg, level, make_insertions(labels, pts)).dimension());
      }
      bool good = true;
      for (auto d : dims)
        if (d != dims[0]) good = false;

      // affine substitution z -> a z + b
      {
        Rational a(3, 2), b(-5);
        std::vector<Rational> moved;
        for (const auto& z : canonical) moved.push_back(a * z + b);
        if (blocks::block(alg, level, make_insertions(labels, moved)).dimension() !=
            dims[0])
          good = false;
      }
      // permutation invariance
      {
        std::vector<lie::Weight> perm_labels = labels;
        std::reverse(perm_labels.begin(), perm_labels.end());
        if (blocks::block(alg, level, make_insertions(perm_labels, canonical))
                .dimension() != dims[0])
          good = false;
      }
      // propagation of vacua
      auto prop = blocks::propagation_check(alg, level,
                                            make_insertions(labels, canonical),
                                            Rational(17));
      if (!prop.ok()) good = false;

      Json c = Json{{"labels", Json::array()}, {"dimension", dims[0]}, {"ok", good}};
      for (const auto& w : labels) c["labels"].push_back(weight_json(w));
      cases.push_back(std::move(c));
      ok = ok && good;
    }
  }
  return Json{{"cases", cases}};
}

Json check_nilpotent_independence(const lie::SimpleLieAlgebra& alg, long level,
                                  std::uint64_t seed, bool& ok) {
  ok = true;
  std::mt19937_64 rng(seed + 1);
  auto p_ell = lie::enumerate_P_ell(alg, level);
  lie::Weight a = p_ell.size() > 1 ? p_ell[1] : p_ell[0];
  std::vector<lie::Weight> labels{a, lie::dualize(alg, a), a, lie::dualize(alg, a)};
  std::vector<Rational> pts{Rational(0), Rational(1), Rational(2), Rational(3)};
  auto ins = make_insertions(labels, pts);
  const Vec cut = lie::highest_root_vector(alg);
  for (int rep = 0; rep < 2; ++rep) {
    Vec other = blocks::random_conjugate(alg, cut, rng);
    if (!blocks::nilpotent_images_match(alg, level, ins, cut, other)) ok = false;
  }
  return Json{{"checked", 2}};
}

Json check_kz(const lie::SimpleLieAlgebra& alg, long level, std::uint64_t seed,
              bool& ok) {
  ok = true;
  std::mt19937_64 rng(seed + 2);
  auto p_ell = lie::enumerate_P_ell(alg, level);
  lie::Weight a = p_ell.size() > 1 ? p_ell[1] : p_ell[0];
  std::vector<lie::Weight> labels{a, lie::dualize(alg, a), a, lie::dualize(alg, a)};
  Json configs = Json::array();
  for (int rep = 0; rep < 2; ++rep) {
    auto pts = random_distinct_points(labels.size(), rng);
    auto kz = blocks::kz_system(blocks::block(alg, level, make_insertions(labels, pts)));
    auto flat = blocks::flatness_check(kz);
    bool good = kz.descends && flat.ok();
    // each A_i commutes with the diagonal action
    for (std::size_t b = 0; b < alg.dim && good; ++b) {
      SparseMatrix d = kz.space.tensor->diagonal_action(unit_vec(alg.dim, b));
      for (const auto& ai : kz.connection)
        if (!(ai * d - d * ai).is_zero()) good = false;
    }
    configs.push_back(Json{{"descends", kz.descends},
                           {"curvature_residual", flat.max_residual.str()},
                           {"block_dim", kz.space.dimension()},
                           {"ok", good}});
    ok = ok && good;
  }
  return Json{{"configs", configs}};
}

Json check_factorization(const lie::SimpleLieAlgebra& alg, long level, bool& ok) {
  ok = true;
  auto p_ell = lie::enumerate_P_ell(alg, level);
  long checked = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& idx : index_multisets(p_ell.size(), n)) {
      std::vector<lie::Weight> labels;
      std::size_t tensor_dim = 1;
      for (std::size_t i : idx) {
        labels.push_back(p_ell[i]);
        tensor_dim *= lie::build_irrep(alg, p_ell[i]).dimension;
      }
      if (tensor_dim > 200) continue;
      for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<bool> in_first;
        for (std::size_t i = 0; i < n; ++i) in_first.push_back((mask >> i) & 1u);
        if (!fusion::factorization_check(alg, level, labels, in_first).ok()) ok = false;
        ++checked;
      }
    }
  }
  return Json{{"splits_checked", checked}};
}

Json check_verlinde(const lie::SimpleLieAlgebra& alg, long level, bool& ok) {
  ok = true;
  fusion::FusionRing ring = fusion::fusion_ring(alg, level);
  auto p_ell = ring.labels;
  long checked = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& idx : index_multisets(p_ell.size(), n)) {
      std::vector<lie::Weight> labels;
      std::size_t tensor_dim = 1;
      for (std::size_t i : idx) {
        labels.push_back(p_ell[i]);
        tensor_dim *= lie::build_irrep(alg, p_ell[i]).dimension;
      }
      if (tensor_dim > 200) continue;
      std::vector<Rational> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(Rational((long)i));
      long direct =
          (long)blocks::block(alg, level, make_insertions(labels, pts)).dimension();
      if (fusion::verlinde_dim(ring, 0, labels) != direct) ok = false;
      // decomposition order independence: recurse on a rotated list
      std::vector<lie::Weight> rotated = labels;
      if (!rotated.empty()) std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      if (fusion::verlinde_dim(ring, 0, rotated) != direct) ok = false;
      ++checked;
    }
  }
  long genus1 = fusion::verlinde_dim(ring, 1, {});
  if (genus1 != static_cast<long>(p_ell.size())) ok = false;
  return Json{{"genus0_checked", checked}, {"genus1_vacuum", genus1}};
}

Json check_fusion_ring(const lie::SimpleLieAlgebra& alg, long level, bool& ok) {
  ok = true;
  fusion::FusionRing ring = fusion::fusion_ring(alg, level);
  const std::size_t n = ring.labels.size();
  const std::size_t zero = ring.label_index(lie::Weight(alg.rank_, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (ring.n(a, b, c) != ring.n(b, a, c)) ok = false;
        // N_{lambda mu nu} := N_{lambda mu}^{nu*} fully symmetric
        std::size_t cs = ring.dual_index(c);
        long nabc = ring.n(a, b, cs);
        std::size_t as = ring.dual_index(a);
        if (nabc != ring.n(b, c, as)) ok = false;
        std::size_t bs = ring.dual_index(b);
        if (nabc != ring.n(a, c, bs)) ok = false;
      }
      if (ring.n(zero, a, b) != (a == b ? 1 : 0)) ok = false;
    }
  // associativity
  for (std::size_t a = 0; a < n && ok; ++a)
    for (std::size_t b = 0; b < n && ok; ++b)
      for (std::size_t c = 0; c < n && ok; ++c)
        for (std::size_t d = 0; d < n && ok; ++d) {
          long lhs = 0, rhs = 0;
          for (std::size_t s = 0; s < n; ++s) {
            lhs += ring.n(a, b, s) * ring.n(s, c, d);
            rhs += ring.n(b, c, s) * ring.n(a, s, d);
          }
          if (lhs != rhs) ok = false;
        }
  return Json{{"labels", n}};
}

Json check_monodromy(const lie::SimpleLieAlgebra& alg, long level, bool& ok) {
  ok = true;
  Json list = Json::array();
  for (const auto& w : lie::enumerate_P_ell(alg, level)) {
    auto md = fusion::monodromy(alg, level, w);
    auto md_dual = fusion::monodromy(alg, level, lie::dualize(alg, w));
    bool good = md.order >= 1 && md.exponent == md_dual.exponent;
    list.push_back(Json{{"label", weight_json(w)},
                        {"exponent", md.exponent.str()},
                        {"order", md.order},
                        {"ok", good}});
    ok = ok && good;
  }
  return Json{{"labels", list}};
}

int cmd_verify_all(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  lie::SimpleLieAlgebra alg = lie::build_algebra(lie::parse_algebra_name(cfg.algebra));
  const long level = cfg.level;
  const int depth = cfg.depth;
  const int kmax = cfg.max_mode;

  std::vector<Item> items;
  items.emplace_back("algebra_invariants", [&](bool& ok) {
    return check_algebra_invariants(alg, ok);
  });
  items.emplace_back("irrep_invariants", [&](bool& ok) {
    return check_irrep_invariants(alg, level, ok);
  });
  items.emplace_back("p_ell", [&](bool& ok) { return check_p_ell(alg, level, ok); });
  items.emplace_back("casimir_basis_independence", [&](bool& ok) {
    return check_casimir_basis_independence(alg, ok);
  });
  items.emplace_back("oscillator_virasoro", [&, kmax](bool& ok) {
    int d = std::max(2 * kmax, depth);
    auto m = affine::build_module(affine::Mode::oscillator, nullptr, {}, 1, d);
    auto r = affine::virasoro_check(m, kmax, d);
    ok = r.ok();
    return virasoro_json(r);
  });
  items.emplace_back("oscillator_derivation", [&](bool& ok) {
    int d = std::max(2 * kmax, depth);
    auto m = affine::build_module(affine::Mode::oscillator, nullptr, {}, 1, d);
    auto r = affine::derivation_property_check(m, kmax, kmax);
    ok = r.ok();
    return Json{{"checked", r.checked}, {"max_residual", r.max_residual.str()}};
  });
  items.emplace_back("affine_virasoro", [&](bool& ok) {
    auto m = affine::build_module(affine::Mode::affine, &alg,
                                  lie::Weight(alg.rank_, 0), level, depth);
    auto r = affine::virasoro_check(m, kmax, depth);
    ok = r.ok();
    Json j = virasoro_json(r);
    j["central_scalar"] = affine::virasoro_central_scalar(m).str();
    return j;
  });
  items.emplace_back("affine_derivation", [&](bool& ok) {
    auto m = affine::build_module(affine::Mode::affine, &alg,
                                  lie::Weight(alg.rank_, 0), level, depth);
    auto r = affine::derivation_property_check(m, std::min(kmax, depth),
                                               std::min(kmax, depth));
    ok = r.ok();
    return Json{{"checked", r.checked}, {"max_residual", r.max_residual.str()}};
  });
  items.emplace_back("loop_brackets", [&](bool& ok) {
    auto m = affine::build_module(affine::Mode::affine, &alg,
                                  lie::Weight(alg.rank_, 0), level,
                                  std::min(depth, 3));
    return check_loop_brackets(m, ok);
  });
  items.emplace_back("pairing_epsilon", [&](bool& ok) {
    return check_pairing_epsilon(alg, level, std::min(depth, 3), ok);
  });
  items.emplace_back("blocks_family", [&](bool& ok) {
    return check_blocks_family(alg, level, cfg.seed, ok);
  });
  items.emplace_back("nilpotent_independence", [&](bool& ok) {
    return check_nilpotent_independence(alg, level, cfg.seed, ok);
  });
  items.emplace_back("kz", [&](bool& ok) { return check_kz(alg, level, cfg.seed, ok); });
  items.emplace_back("factorization", [&](bool& ok) {
    return check_factorization(alg, level, ok);
  });
  items.emplace_back("verlinde", [&](bool& ok) { return check_verlinde(alg, level, ok); });
  items.emplace_back("fusion_ring", [&](bool& ok) {
    return check_fusion_ring(alg, level, ok);
  });
  items.emplace_back("monodromy", [&](bool& ok) {
    return check_monodromy(alg, level, ok);
  });

  // Optional fan-out over verification items; output order is fixed either way.
  long workers = 1;
  if (const char* w = std::getenv("WZWBLOCKS_WORKERS")) {
    char* end = nullptr;
    long parsed = std::strtol(w, &end, 10);
    if (end && *end == '\0' && parsed > 0) workers = parsed;
  }
  std::vector<ItemResult> results(items.size());
  if (workers > 1) {
    std::vector<std::future<ItemResult>> futures;
    futures.reserve(items.size());
    for (const auto& item : items)
      futures.push_back(std::async(std::launch::async, run_item, std::cref(item)));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = run_item(items[i]);
  }

  bool all_ok = true;
  Json out_items = Json::array();
  for (const auto& r : results) {
    err << (r.ok ? "ok   " : "FAIL ") << r.name << "\n";
    if (!r.ok) {
      all_ok = false;
      err << "  " << r.details.dump() << "\n";
    }
    Json j;
    j["name"] = r.name;
    j["ok"] = r.ok;
    j["details"] = r.details;
    out_items.push_back(std::move(j));
  }

  Json report;
  report["config"] = Json{{"algebra", cfg.algebra}, {"level", level},
                          {"depth", depth},         {"max_mode", kmax},
                          {"seed", cfg.seed}};
  report["items"] = std::move(out_items);
  report["ok"] = all_ok;
  out << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

std::vector<lie::Weight> parse_labels(const std::string& s, std::size_t rank) {
  std::vector<lie::Weight> out;
  if (s.empty()) return out;
  for (const auto& token : split(s, ',')) out.push_back(parse_weight(token, rank));
  return out;
}

lie::Weight parse_weight(const std::string& s, std::size_t rank) {
  lie::Weight w;
  for (const auto& token : split(s, ':')) {
    if (token.empty()) throw std::invalid_argument("empty weight coordinate in '" + s + "'");
    std::size_t pos = 0;
    long c = std::stol(token, &pos);
    if (pos != token.size())
      throw std::invalid_argument("bad weight coordinate '" + token + "'");
    w.push_back(c);
  }
  if (w.size() != rank)
    throw std::invalid_argument("weight '" + s + "' needs " + std::to_string(rank) +
                                " coordinate(s)");
  return w;
}

std::vector<Rational> parse_points(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const auto& token : split(s, ',')) out.push_back(Rational::from_string(token));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact WZW conformal block computations over the rationals", "wzwblocks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string weight_str, label_str, labels_str, points_str;
  std::string mode_str = "affine";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "sl2, sl3 or sl4")
        ->capture_default_str();
    sub->add_option("--level", cfg.level, "level ell")->capture_default_str();
  };

  // lie info
  auto* lie_cmd = app.add_subcommand("lie", "simple Lie algebra data");
  auto* lie_info = lie_cmd->add_subcommand("info", "algebra and irrep descriptors");
  add_common(lie_info);
  lie_info->add_option("--weight", weight_str, "highest weight, e.g. 1 or 1:0");

  // module build
  auto* module_cmd = app.add_subcommand("module", "graded affine modules");
  auto* module_build =
      module_cmd->add_subcommand("build", "build a truncated module and report dimensions");
  add_common(module_build);
  module_build->add_option("--mode", mode_str, "oscillator or affine")
      ->capture_default_str();
  module_build->add_option("--weight", weight_str, "bottom highest weight");
  module_build->add_option("--depth", cfg.depth, "truncation depth")
      ->capture_default_str();

  // virasoro check
  auto* virasoro_cmd = app.add_subcommand("virasoro", "Virasoro relation checks");
  auto* virasoro_chk = virasoro_cmd->add_subcommand("check", "verify the commutation relations");
  add_common(virasoro_chk);
  virasoro_chk->add_option("--mode", mode_str, "oscillator or affine")
      ->capture_default_str();
  virasoro_chk->add_option("--weight", weight_str, "bottom highest weight");
  virasoro_chk->add_option("--depth", cfg.depth, "truncation depth")
      ->capture_default_str();
  virasoro_chk->add_option("--max-mode", cfg.max_mode, "check |k|,|l| up to this")
      ->capture_default_str();

  // blocks
  auto* blocks_cmd = app.add_subcommand("blocks", "genus-zero conformal blocks");
  auto* blocks_dim = blocks_cmd->add_subcommand("dim", "block dimension");
  add_common(blocks_dim);
  blocks_dim->add_option("--labels", labels_str, "comma separated weights")->required();
  blocks_dim->add_option("--points", points_str, "comma separated rational points")
      ->required();
  auto* blocks_kz = blocks_cmd->add_subcommand("kz", "KZ connection and curvature");
  add_common(blocks_kz);
  blocks_kz->add_option("--labels", labels_str, "comma separated weights")->required();
  blocks_kz->add_option("--points", points_str, "comma separated rational points")
      ->required();

  // fusion
  auto* fusion_cmd = app.add_subcommand("fusion", "fusion ring and degeneration data");
  auto* fusion_table = fusion_cmd->add_subcommand("table", "fusion coefficients");
  add_common(fusion_table);
  fusion_table->add_option("--format", cfg.format, "json or table")
      ->capture_default_str();
  auto* fusion_verlinde = fusion_cmd->add_subcommand("verlinde", "Verlinde dimension");
  add_common(fusion_verlinde);
  fusion_verlinde->add_option("--genus", cfg.genus, "genus")->capture_default_str();
  fusion_verlinde->add_option("--labels", labels_str, "boundary labels, may be empty");
  auto* fusion_monodromy =
      fusion_cmd->add_subcommand("monodromy", "degeneration monodromy exponent");
  add_common(fusion_monodromy);
  fusion_monodromy->add_option("--label", label_str, "channel label")->required();

  // verify all
  auto* verify_cmd = app.add_subcommand("verify", "verification batteries");
  auto* verify_all = verify_cmd->add_subcommand("all", "run the full invariant battery");
  add_common(verify_all);
  verify_all->add_option("--depth", cfg.depth, "truncation depth")
      ->capture_default_str();
  verify_all->add_option("--max-mode", cfg.max_mode, "Virasoro mode bound")
      ->capture_default_str();
  verify_all->add_option("--seed", cfg.seed, "seed for randomized invariants")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    lie::SimpleLieAlgebra alg = lie::build_algebra(lie::parse_algebra_name(cfg.algebra));

    if (lie_info->parsed()) {
      Json j;
      j["algebra"] = cfg.algebra;
      j["dimension"] = alg.dim;
      j["rank"] = alg.rank_;
      j["dual_coxeter"] = alg.dual_coxeter.str();
      if (lie_info->count("--level")) {
        Json weights = Json::array();
        for (const auto& w : lie::enumerate_P_ell(alg, cfg.level)) {
          lie::FiniteIrrep rep = lie::build_irrep(alg, w);
          weights.push_back(Json{{"weight", weight_json(w)},
                                 {"dimension", rep.dimension},
                                 {"casimir", rep.casimir_scalar.str()},
                                 {"level", rep.level},
                                 {"dual", weight_json(lie::dualize(alg, w))}});
        }
        j["p_ell"] = std::move(weights);
      }
      if (!weight_str.empty()) {
        lie::FiniteIrrep rep = lie::build_irrep(alg, parse_weight(weight_str, alg.rank_));
        j["irrep"] = Json{{"weight", weight_json(rep.highest_weight)},
                          {"dimension", rep.dimension},
                          {"casimir", rep.casimir_scalar.str()},
                          {"level", rep.level}};
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (module_build->parsed()) {
      affine::Mode mode = mode_str == "oscillator" ? affine::Mode::oscillator
                          : mode_str == "affine"
                              ? affine::Mode::affine
                              : throw std::invalid_argument("bad --mode " + mode_str);
      lie::Weight w(alg.rank_, 0);
      if (!weight_str.empty()) w = parse_weight(weight_str, alg.rank_);
      auto m = affine::build_module(mode, mode == affine::Mode::affine ? &alg : nullptr,
                                    w, cfg.level, cfg.depth);
      Json j;
      j["mode"] = mode_str;
      if (mode == affine::Mode::affine) {
        j["algebra"] = cfg.algebra;
        j["level"] = cfg.level;
        j["weight"] = weight_json(w);
      }
      j["depth"] = cfg.depth;
      j["dims"] = m.dims;
      Json ranks = Json::array();
      for (const auto& g : m.gram) ranks.push_back(rank(g));
      j["gram_ranks"] = std::move(ranks);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (virasoro_chk->parsed()) {
      affine::Mode mode = mode_str == "oscillator" ? affine::Mode::oscillator
                          : mode_str == "affine"
                              ? affine::Mode::affine
                              : throw std::invalid_argument("bad --mode " + mode_str);
      lie::Weight w(alg.rank_, 0);
      if (!weight_str.empty()) w = parse_weight(weight_str, alg.rank_);
      auto m = affine::build_module(mode, mode == affine::Mode::affine ? &alg : nullptr,
                                    w, cfg.level, cfg.depth);
      auto r = affine::virasoro_check(m, cfg.max_mode, cfg.depth);
      Json j = virasoro_json(r);
      j["mode"] = mode_str;
      j["central_scalar"] = affine::virasoro_central_scalar(m).str();
      out << j.dump(2) << "\n";
      if (!r.ok()) {
        const auto& f = r.failures.front();
        err << "virasoro relation failed at k=" << f.k << " l=" << f.l
            << " degree=" << f.degree << " residual=" << f.residual.str() << "\n";
        return 1;
      }
      return 0;
    }

    if (blocks_dim->parsed() || blocks_kz->parsed()) {
      auto labels = parse_labels(labels_str, alg.rank_);
      auto points = parse_points(points_str);
      auto ins = make_insertions(labels, points);
      auto b = blocks::block(alg, cfg.level, ins);
      if (blocks_dim->parsed()) {
        Json j;
        j["algebra"] = cfg.algebra;
        j["level"] = cfg.level;
        j["labels"] = Json::array();
        for (const auto& w : labels) j["labels"].push_back(weight_json(w));
        j["points"] = to_json(points);
        j["tensor_dim"] = b.tensor_dim();
        j["covariant_dim"] = b.covariant_dim();
        j["dimension"] = b.dimension();
        out << j.dump(2) << "\n";
        return 0;
      }
      auto kz = blocks::kz_system(std::move(b));
      auto flat = blocks::flatness_check(kz);
      Json j;
      j["algebra"] = cfg.algebra;
      j["level"] = cfg.level;
      j["normalization"] = kz.normalization.str();
      j["block_dim"] = kz.space.dimension();
      Json conn = Json::array();
      for (const auto& a : kz.connection) conn.push_back(to_json(a));
      j["connection"] = std::move(conn);
      j["descends"] = kz.descends;
      j["curvature"] = Json{{"pairs_checked", flat.pairs_checked},
                            {"max_residual", flat.max_residual.str()},
                            {"max_tensor_residual", flat.max_tensor_residual.str()},
                            {"ok", flat.ok()}};
      out << j.dump(2) << "\n";
      if (!kz.descends || !flat.ok()) {
        err << "KZ check failed: "
            << (!kz.descends ? "connection does not descend to the block"
                             : "curvature residual " + flat.max_residual.str())
            << "\n";
        return 1;
      }
      return 0;
    }

    if (fusion_table->parsed()) {
      auto ring = fusion::fusion_ring(alg, cfg.level);
      if (cfg.format == "table") {
        const std::size_t n = ring.labels.size();
        for (std::size_t c = 0; c < n; ++c) {
          out << "N[. , . -> " << lie::weight_to_string(ring.labels[c]) << "]\n";
          out << "      ";
          for (std::size_t b = 0; b < n; ++b)
            out << lie::weight_to_string(ring.labels[b]) << "  ";
          out << "\n";
          for (std::size_t a = 0; a < n; ++a) {
            out << lie::weight_to_string(ring.labels[a]) << "  ";
            for (std::size_t b = 0; b < n; ++b) out << "   " << ring.n(a, b, c) << "  ";
            out << "\n";
          }
          out << "\n";
        }
        return 0;
      }
      if (cfg.format != "json") throw std::invalid_argument("bad --format " + cfg.format);
      Json j;
      j["algebra"] = cfg.algebra;
      j["level"] = cfg.level;
      j["labels"] = Json::array();
      for (const auto& w : ring.labels) j["labels"].push_back(weight_json(w));
      Json coeffs = Json::array();
      for (std::size_t a = 0; a < ring.labels.size(); ++a)
        for (std::size_t b = 0; b < ring.labels.size(); ++b)
          for (std::size_t c = 0; c < ring.labels.size(); ++c)
            if (ring.n(a, b, c) != 0)
              coeffs.push_back(Json{{"lambda", weight_json(ring.labels[a])},
                                    {"mu", weight_json(ring.labels[b])},
                                    {"nu", weight_json(ring.labels[c])},
                                    {"n", ring.n(a, b, c)}});
      j["coefficients"] = std::move(coeffs);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (fusion_verlinde->parsed()) {
      auto ring = fusion::fusion_ring(alg, cfg.level);
      auto labels = parse_labels(labels_str, alg.rank_);
      long dim = fusion::verlinde_dim(ring, cfg.genus, labels);
      Json j;
      j["algebra"] = cfg.algebra;
      j["level"] = cfg.level;
      j["genus"] = cfg.genus;
      j["labels"] = Json::array();
      for (const auto& w : labels) j["labels"].push_back(weight_json(w));
      j["dimension"] = dim;
      out << j.dump(2) << "\n";
      return 0;
    }

    if (fusion_monodromy->parsed()) {
      auto md = fusion::monodromy(alg, cfg.level, parse_weight(label_str, alg.rank_));
      Json j;
      j["algebra"] = cfg.algebra;
      j["level"] = cfg.level;
      j["label"] = weight_json(md.label);
      j["exponent"] = md.exponent.str();
      j["order"] = md.order;
      out << j.dump(2) << "\n";
      return 0;
    }

    if (verify_all->parsed()) return cmd_verify_all(cfg, out, err);

    err << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wzw::cli
