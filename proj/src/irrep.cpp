#include "wzw/irrep.hpp"

#include <stdexcept>

namespace wzw::lie {

namespace {

// Cartan matrix row: alpha_i in fundamental-weight coordinates.
std::vector<long> simple_root_coords(std::size_t rank, std::size_t i) {
  std::vector<long> a(rank, 0);
  a[i] = 2;
  if (i > 0) a[i - 1] = -1;
  if (i + 1 < rank) a[i + 1] = -1;
  return a;
}

}  // namespace

SparseMatrix FiniteIrrep::action_of(const Vec& coords) const {
  SparseMatrix m(dimension, dimension);
  for (std::size_t a = 0; a < coords.size(); ++a)
    if (!coords[a].is_zero()) m = m + action[a].scaled(coords[a]);
  return m;
}

FiniteIrrep build_irrep(const SimpleLieAlgebra& alg, const Weight& highest) {
  const std::size_t rank = alg.rank_;
  if (highest.size() != rank)
    throw std::invalid_argument("build_irrep: weight has wrong number of coordinates");
  for (long c : highest)
    if (c < 0) throw std::invalid_argument("build_irrep: weight is not dominant");

  // Per-height state. Heights index the number of lowering steps applied.
  std::vector<std::size_t> dims{1};
  std::vector<std::vector<Weight>> wts{{highest}};
  std::vector<SparseMatrix> gram{SparseMatrix::identity(1)};
  // lower[i][h]: f_i from height h to h+1; raise[i][h]: e_i from h to h-1.
  std::vector<std::vector<SparseMatrix>> lower(rank), raise(rank);
  for (std::size_t i = 0; i < rank; ++i) raise[i].push_back(SparseMatrix(0, 1));

  constexpr std::size_t kDimCap = 200000;
  std::size_t total = 1;

  for (std::size_t h = 0;; ++h) {
    const std::size_t nh = dims[h];
    const std::size_t ncand = rank * nh;

    // Shapovalov inner products of the candidates f_i u.
    // <f_i u, f_j u'> = <u, f_j e_i u'> + delta_ij <wt(u'), alpha_i-check> <u, u'>.
    SparseMatrix gc(ncand, ncand);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        SparseMatrix t = h > 0 ? lower[j][h - 1] * raise[i][h] : SparseMatrix(nh, nh);
        if (i == j) {
          for (std::size_t u = 0; u < nh; ++u)
            t.add_at(u, u, Rational(wts[h][u][static_cast<std::size_t>(i)]));
        }
        SparseMatrix m = gram[h] * t;
        for (std::size_t u = 0; u < nh; ++u)
          for (const auto& [up, v] : m.row(u)) gc.set(i * nh + u, j * nh + up, v);
      }
    }

    Echelon ech = reduced_row_echelon(gc);
    const std::size_t nnew = ech.rank();
    if (nnew == 0) {
      for (std::size_t i = 0; i < rank; ++i) lower[i].push_back(SparseMatrix(0, nh));
      break;
    }
    const std::vector<Index>& sel = ech.pivot_cols;

    dims.push_back(nnew);
    total += nnew;
    if (total > kDimCap) throw std::logic_error("build_irrep: dimension cap exceeded");

    wts.push_back({});
    for (Index c : sel) {
      std::size_t i = c / nh, u = c % nh;
      Weight w = wts[h][u];
      auto alpha = simple_root_coords(rank, i);
      for (std::size_t k = 0; k < rank; ++k) w[k] -= alpha[k];
      wts[h + 1].push_back(std::move(w));
    }

    SparseMatrix gnew(nnew, nnew);
    for (std::size_t a = 0; a < nnew; ++a)
      for (std::size_t b = 0; b < nnew; ++b) gnew.set(a, b, gc.at(sel[a], sel[b]));
    gram.push_back(gnew);

    // Coordinates of every candidate in the retained basis.
    SparseMatrix rhs(nnew, ncand);
    for (std::size_t a = 0; a < nnew; ++a)
      for (const auto& [c, v] : gc.row(sel[a])) rhs.set(a, c, v);
    SparseMatrix expand = solve(gnew, rhs);

    for (std::size_t i = 0; i < rank; ++i) {
      SparseMatrix li(nnew, nh);
      for (std::size_t u = 0; u < nh; ++u) li.set_column(u, expand.column(i * nh + u));
      lower[i].push_back(std::move(li));
    }

    // e_k on a new vector f_i u: f_i (e_k u) + delta_ki <wt(u), alpha_k-check> u.
    for (std::size_t k = 0; k < rank; ++k) {
      SparseMatrix rk(nh, nnew);
      for (std::size_t a = 0; a < nnew; ++a) {
        std::size_t i = sel[a] / nh, u = sel[a] % nh;
        Vec col(nh);
        if (h > 0) col = lower[i][h - 1].apply(raise[k][h].column(u));
        if (k == i) col[u] += Rational(wts[h][u][k]);
        rk.set_column(a, col);
      }
      raise[k].push_back(std::move(rk));
    }
  }

  const std::size_t heights = dims.size();
  FiniteIrrep rep;
  rep.algebra = &alg;
  rep.highest_weight = highest;
  std::vector<std::size_t> offset(heights);
  for (std::size_t h = 1; h < heights; ++h) offset[h] = offset[h - 1] + dims[h - 1];
  rep.dimension = offset[heights - 1] + dims[heights - 1];
  for (std::size_t h = 0; h < heights; ++h)
    rep.weights.insert(rep.weights.end(), wts[h].begin(), wts[h].end());

  rep.gram = SparseMatrix(rep.dimension, rep.dimension);
  for (std::size_t h = 0; h < heights; ++h)
    for (std::size_t a = 0; a < dims[h]; ++a)
      for (const auto& [b, v] : gram[h].row(a)) rep.gram.set(offset[h] + a, offset[h] + b, v);

  // Assemble global action matrices: Cartan (diagonal), simple raising and
  // lowering from the per-height blocks, the rest by bracket recursion.
  rep.action.assign(alg.dim, SparseMatrix(rep.dimension, rep.dimension));
  std::vector<bool> have(alg.dim, false);
  for (std::size_t i = 0; i < rank; ++i) {
    SparseMatrix hm(rep.dimension, rep.dimension);
    for (std::size_t v = 0; v < rep.dimension; ++v)
      hm.set(v, v, Rational(rep.weights[v][i]));
    rep.action[alg.chevalley_h[i]] = std::move(hm);
    have[alg.chevalley_h[i]] = true;

    SparseMatrix fm(rep.dimension, rep.dimension);
    for (std::size_t h = 0; h + 1 < heights; ++h)
      for (std::size_t u = 0; u < dims[h]; ++u)
        for (std::size_t w = 0; w < dims[h + 1]; ++w) {
          const Rational& v = lower[i][h].at(w, u);
          if (!v.is_zero()) fm.set(offset[h + 1] + w, offset[h] + u, v);
        }
    rep.action[alg.chevalley_f[i]] = std::move(fm);
    have[alg.chevalley_f[i]] = true;

    SparseMatrix em(rep.dimension, rep.dimension);
    for (std::size_t h = 1; h < heights; ++h)
      for (std::size_t u = 0; u < dims[h]; ++u)
        for (std::size_t w = 0; w < dims[h - 1]; ++w) {
          const Rational& v = raise[i][h].at(w, u);
          if (!v.is_zero()) em.set(offset[h - 1] + w, offset[h] + u, v);
        }
    rep.action[alg.chevalley_e[i]] = std::move(em);
    have[alg.chevalley_e[i]] = true;
  }
  // Remaining root elements by increasing index distance, so that each
  // bracket decomposition only references already-known actions.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t b = 0; b < alg.dim; ++b) {
      if (have[b]) continue;
      const auto& terms = alg.bracket_decomposition(b);
      bool ready = true;
      for (const auto& t : terms)
        if (!have[t.y] || !have[t.z]) ready = false;
      if (!ready) continue;
      SparseMatrix m(rep.dimension, rep.dimension);
      for (const auto& t : terms) {
        SparseMatrix c = rep.action[t.y] * rep.action[t.z] - rep.action[t.z] * rep.action[t.y];
        m = m + c.scaled(t.coeff);
      }
      rep.action[b] = std::move(m);
      have[b] = true;
      progress = true;
    }
  }
  for (bool ok : have)
    if (!ok) throw std::logic_error("build_irrep: incomplete action assembly");

  // Casimir scalar.
  SparseMatrix cas(rep.dimension, rep.dimension);
  for (const auto& [x, y] : alg.dual_pairs) cas = cas + rep.action_of(x) * rep.action_of(y);
  rep.casimir_scalar = cas.at(0, 0);
  if (cas != SparseMatrix::identity(rep.dimension).scaled(rep.casimir_scalar))
    throw std::logic_error("build_irrep: Casimir is not scalar");

  rep.level = level_of_weight(alg, highest);
  return rep;
}

long level_of(const FiniteIrrep& irrep) { return irrep.level; }

}  // namespace wzw::lie
