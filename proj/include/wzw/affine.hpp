#pragma once

#include <optional>
#include <vector>

#include "wzw/irrep.hpp"
#include "wzw/lie.hpp"

namespace wzw::affine {

enum class Mode { oscillator, affine };

/// X tensor t^exponent, or the central element.
struct LoopElement {
  Vec coords;  // algebra coordinates; single entry in oscillator mode
  int exponent = 0;
  bool central = false;

  static LoopElement central_element(std::size_t coord_dim) {
    LoopElement e;
    e.coords = zero_vec(coord_dim);
    e.central = true;
    return e;
  }
};

/// Depth-truncated integrable module. Degree d holds the vectors obtained
/// from the bottom representation by total lowering weight d (the usual
/// homogeneous grading would call it -d). The loop operator X t^k maps
/// degree d to degree d - k.
///
/// Oscillator mode is the vacuum Fock module of the Heisenberg algebra at
/// hbar = 1, with the degree-d basis indexed by partitions of d. Affine mode
/// is the level-ell module induced from V_lambda, cut down degree by degree
/// to the kernel-free quotient of the contravariant form.
class GradedAffineModule {
public:
  Mode mode = Mode::oscillator;
  const lie::SimpleLieAlgebra* algebra = nullptr;  // null in oscillator mode
  long level = 1;                                  // ell; hbar = 1 for oscillator
  std::optional<lie::FiniteIrrep> bottom;          // absent in oscillator mode
  int depth = 0;

  std::vector<std::size_t> dims;   // per degree 0..depth
  std::vector<SparseMatrix> gram;  // contravariant Gram per degree

  /// Affine mode: degree d >= 1 basis vector j arose as (X_b t^-1) u, stored
  /// as (b, index of u in degree d-1).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> provenance;
  /// Oscillator mode: the partition labelling each degree-d basis vector,
  /// parts non-increasing.
  std::vector<std::vector<std::vector<int>>> partitions;

  std::size_t generator_count() const { return algebra ? algebra->dim : 1; }
  Rational central_scalar() const { return Rational(level); }
  bool in_window(int d) const { return d >= 0 && d <= depth; }

  /// Matrix of X_b t^k from degree d to degree d-k; both must be in window.
  const SparseMatrix& action(std::size_t b, int k, int d) const;
  SparseMatrix action_of(const Vec& coords, int k, int d) const;

  // storage: act_[b][k + depth][d]
  std::vector<std::vector<std::vector<SparseMatrix>>> act_;
};

/// Builds the truncated module. Affine mode requires lambda of level <= ell
/// (otherwise the module is zero and the call is rejected).
GradedAffineModule build_module(Mode mode, const lie::SimpleLieAlgebra* alg,
                                const lie::Weight& lambda, long ell, int depth);

struct GradedVector {
  std::vector<Vec> comp;  // per degree 0..depth
  bool truncated = false;

  bool is_zero() const;
};

GradedVector zero_vector(const GradedAffineModule& m);
GradedVector basis_vector(const GradedAffineModule& m, int degree, std::size_t index);
GradedVector vacuum_vector(const GradedAffineModule& m);

/// Applies a loop element. Components pushed past the truncation depth are
/// dropped and the result is flagged as truncated.
GradedVector loop_act(const GradedAffineModule& m, const LoopElement& x,
                      const GradedVector& v);

}  // namespace wzw::affine
