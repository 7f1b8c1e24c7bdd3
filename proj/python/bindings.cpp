#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wzw/blocks.hpp"
#include "wzw/fusion.hpp"
#include "wzw/kz.hpp"
#include "wzw/monodromy.hpp"
#include "wzw/pairing.hpp"
#include "wzw/sugawara.hpp"

namespace py = pybind11;
using namespace wzw;

namespace {

lie::SimpleLieAlgebra algebra(const std::string& name) {
  return lie::build_algebra(lie::parse_algebra_name(name));
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long>());
  return Rational::from_string(h.cast<std::string>());
}

std::vector<Rational> to_points(const py::sequence& seq) {
  std::vector<Rational> pts;
  for (const auto& p : seq) pts.push_back(to_rational(p));
  return pts;
}

std::vector<blocks::Insertion> to_insertions(const lie::SimpleLieAlgebra& alg,
                                             const std::vector<lie::Weight>& labels,
                                             const py::sequence& points) {
  auto pts = to_points(points);
  if (pts.size() != labels.size())
    throw std::invalid_argument("need as many points as labels");
  std::vector<blocks::Insertion> ins;
  for (std::size_t i = 0; i < labels.size(); ++i) ins.push_back({pts[i], labels[i]});
  return ins;
}

py::dict matrix_dict(const SparseMatrix& m) {
  py::dict d;
  d["rows"] = m.rows();
  d["cols"] = m.cols();
  py::list entries;
  for (Index i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i))
      entries.append(py::make_tuple(i, j, v.str()));
  d["entries"] = entries;
  return d;
}

affine::Mode parse_mode(const std::string& mode) {
  if (mode == "oscillator") return affine::Mode::oscillator;
  if (mode == "affine") return affine::Mode::affine;
  throw std::invalid_argument("mode must be 'oscillator' or 'affine'");
}

affine::GradedAffineModule make_module(const lie::SimpleLieAlgebra* alg,
                                       const std::string& mode, const lie::Weight& w,
                                       long level, int depth) {
  affine::Mode m = parse_mode(mode);
  return affine::build_module(m, m == affine::Mode::affine ? alg : nullptr, w, level,
                              depth);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact-rational WZW machinery: truncated oscillator and affine modules, "
      "Sugawara operators and Virasoro relations, genus-zero conformal blocks, "
      "the KZ connection, fusion coefficients, Verlinde dimensions and "
      "degeneration monodromy. All values are exact; rationals cross the "
      "boundary as 'p/q' strings.";

  m.def(
      "algebra_info",
      [](const std::string& name) {
        auto alg = algebra(name);
        py::dict d;
        d["name"] = name;
        d["dimension"] = alg.dim;
        d["rank"] = alg.rank_;
        d["dual_coxeter"] = alg.dual_coxeter.str();
        return d;
      },
      py::arg("algebra"));

  m.def(
      "weights",
      [](const std::string& name, long level) {
        return lie::enumerate_P_ell(algebra(name), level);
      },
      py::arg("algebra"), py::arg("level"),
      "Dominant weights of level <= ell, in enumeration order.");

  m.def(
      "irrep_info",
      [](const std::string& name, const lie::Weight& w) {
        auto alg = algebra(name);
        auto rep = lie::build_irrep(alg, w);
        py::dict d;
        d["weight"] = rep.highest_weight;
        d["dimension"] = rep.dimension;
        d["casimir"] = rep.casimir_scalar.str();
        d["level"] = rep.level;
        d["dual"] = lie::dualize(alg, w);
        return d;
      },
      py::arg("algebra"), py::arg("weight"));

  m.def(
      "module_dims",
      [](const std::string& mode, const std::string& name, const lie::Weight& w,
         long level, int depth) {
        auto alg = algebra(name);
        return make_module(&alg, mode, w, level, depth).dims;
      },
      py::arg("mode"), py::arg("algebra") = "sl2",
      py::arg("weight") = lie::Weight{0}, py::arg("level") = 1, py::arg("depth") = 3,
      "Per-degree dimensions of the truncated module.");

  m.def(
      "virasoro_check",
      [](const std::string& mode, const std::string& name, const lie::Weight& w,
         long level, int depth, int max_mode) {
        auto alg = algebra(name);
        auto mod = make_module(&alg, mode, w, level, depth);
        auto r = affine::virasoro_check(mod, max_mode, depth);
        py::dict d;
        d["ok"] = r.ok();
        d["max_residual"] = r.max_residual.str();
        d["triples_checked"] = r.triples_checked;
        d["central_scalar"] = affine::virasoro_central_scalar(mod).str();
        return d;
      },
      py::arg("mode"), py::arg("algebra") = "sl2",
      py::arg("weight") = lie::Weight{0}, py::arg("level") = 1, py::arg("depth") = 4,
      py::arg("max_mode") = 2);

  m.def(
      "derivation_check",
      [](const std::string& mode, const std::string& name, const lie::Weight& w,
         long level, int depth, int max_mode) {
        auto alg = algebra(name);
        auto mod = make_module(&alg, mode, w, level, depth);
        auto r = affine::derivation_property_check(mod, max_mode, max_mode);
        py::dict d;
        d["ok"] = r.ok();
        d["max_residual"] = r.max_residual.str();
        d["checked"] = r.checked;
        return d;
      },
      py::arg("mode"), py::arg("algebra") = "sl2",
      py::arg("weight") = lie::Weight{0}, py::arg("level") = 1, py::arg("depth") = 4,
      py::arg("max_mode") = 2);

  m.def(
      "covariant_dimension",
      [](const std::string& name, const std::vector<lie::Weight>& labels) {
        auto alg = algebra(name);
        return blocks::covariants(alg, labels).quotient_dim;
      },
      py::arg("algebra"), py::arg("labels"));

  m.def(
      "block_dimension",
      [](const std::string& name, long level, const std::vector<lie::Weight>& labels,
         const py::sequence& points) {
        auto alg = algebra(name);
        return blocks::block(alg, level, to_insertions(alg, labels, points)).dimension();
      },
      py::arg("algebra"), py::arg("level"), py::arg("labels"), py::arg("points"),
      "Genus-zero block dimension at the given rational points (ints or 'p/q').");

  m.def(
      "propagation_check",
      [](const std::string& name, long level, const std::vector<lie::Weight>& labels,
         const py::sequence& points, const py::handle& extra_point) {
        auto alg = algebra(name);
        auto r = blocks::propagation_check(alg, level, to_insertions(alg, labels, points),
                                           to_rational(extra_point));
        py::dict d;
        d["base_dim"] = r.base_dim;
        d["extended_dim"] = r.extended_dim;
        d["ok"] = r.ok();
        return d;
      },
      py::arg("algebra"), py::arg("level"), py::arg("labels"), py::arg("points"),
      py::arg("extra_point"));

  m.def(
      "kz_system",
      [](const std::string& name, long level, const std::vector<lie::Weight>& labels,
         const py::sequence& points) {
        auto alg = algebra(name);
        auto kz =
            blocks::kz_system(blocks::block(alg, level, to_insertions(alg, labels, points)));
        auto flat = blocks::flatness_check(kz);
        py::dict d;
        d["normalization"] = kz.normalization.str();
        d["block_dim"] = kz.space.dimension();
        py::list conn;
        for (const auto& a : kz.connection) conn.append(matrix_dict(a));
        d["connection"] = conn;
        d["descends"] = kz.descends;
        d["curvature_residual"] = flat.max_residual.str();
        d["flat"] = flat.ok();
        return d;
      },
      py::arg("algebra"), py::arg("level"), py::arg("labels"), py::arg("points"));

  m.def(
      "fusion_table",
      [](const std::string& name, long level) {
        auto alg = algebra(name);
        auto ring = fusion::fusion_ring(alg, level);
        py::dict d;
        d["labels"] = ring.labels;
        py::list entries;
        for (std::size_t a = 0; a < ring.labels.size(); ++a)
          for (std::size_t b = 0; b < ring.labels.size(); ++b)
            for (std::size_t c = 0; c < ring.labels.size(); ++c)
              if (ring.n(a, b, c) != 0)
                entries.append(py::make_tuple(ring.labels[a], ring.labels[b],
                                              ring.labels[c], ring.n(a, b, c)));
        d["coefficients"] = entries;
        return d;
      },
      py::arg("algebra"), py::arg("level"));

  m.def(
      "verlinde_dimension",
      [](const std::string& name, long level, long genus,
         const std::vector<lie::Weight>& labels) {
        auto alg = algebra(name);
        auto ring = fusion::fusion_ring(alg, level);
        return fusion::verlinde_dim(ring, genus, labels);
      },
      py::arg("algebra"), py::arg("level"), py::arg("genus"), py::arg("labels"));

  m.def(
      "factorization_check",
      [](const std::string& name, long level, const std::vector<lie::Weight>& labels,
         const std::vector<bool>& in_first) {
        auto alg = algebra(name);
        auto r = fusion::factorization_check(alg, level, labels, in_first);
        py::dict d;
        d["total_dim"] = r.total_dim;
        d["channel_sum"] = r.channel_sum;
        d["ok"] = r.ok();
        py::list channels;
        for (const auto& ch : r.channels)
          channels.append(py::make_tuple(ch.channel, ch.left_dim, ch.right_dim));
        d["channels"] = channels;
        return d;
      },
      py::arg("algebra"), py::arg("level"), py::arg("labels"), py::arg("in_first"));

  m.def(
      "monodromy",
      [](const std::string& name, long level, const lie::Weight& label) {
        auto alg = algebra(name);
        auto md = fusion::monodromy(alg, level, label);
        py::dict d;
        d["label"] = md.label;
        d["exponent"] = md.exponent.str();
        d["order"] = md.order;
        return d;
      },
      py::arg("algebra"), py::arg("level"), py::arg("label"));

  m.def(
      "degeneration_check",
      [](const std::string& name, long level, const lie::Weight& label, int depth) {
        auto alg = algebra(name);
        auto r = fusion::degeneration_operator_check(alg, level, label, depth);
        py::dict d;
        d["ok"] = r.ok();
        d["expected_scalar"] = r.expected_scalar.str();
        d["degrees_checked"] = r.degrees_checked;
        return d;
      },
      py::arg("algebra"), py::arg("level"), py::arg("label"), py::arg("depth") = 3,
      "Per-degree Sugawara eigenvalue identity on the gluing tensor.");

  m.attr("__version__") = "0.1.0";
}
