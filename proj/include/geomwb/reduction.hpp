#pragma once

#include <optional>
#include <vector>

#include "geomwb/connection.hpp"
#include "geomwb/structures.hpp"

namespace geomwb {

/// Pointwise data of a circle action at a point of the zero level set.
struct ReductionDatum {
  FrameVector X;
  Scalar t;
  KForm dt;
  /// The zero level set is a subgroup with Lie algebra spanned by `subalgebra`
  /// (empty: use the level tangent space).
  bool subgroup = false;
  std::vector<FrameVector> subalgebra;
};

struct LevelTangent {
  std::vector<FrameVector> basis;
  /// False when X _| F = 0, so the level set is not cut out transversally.
  bool transverse = true;
};

/// ker(Y -> F(X, Y)). Throws DegenerateX for X = 0.
LevelTangent level_tangent(const SUStructureForms& s, const FrameVector& x);

/// nu = (t^{-1} X _| F)^sharp.
FrameVector reeb_normal(const SUStructureForms& s, const FrameVector& x, const Scalar& t);

struct ReductionCondition {
  bool holds = false;
  /// dt = lambda (X _| F) + mu alpha when holds.
  Scalar lambda;
  Scalar mu;
};

ReductionCondition check_reduction_condition(const SUStructureForms& s, const ReductionDatum& d);

/// Orthogonal P with columns f_a preserving (alpha, F): f_{2n-1} = X/t,
/// f_{2n} = nu, f_{2n+1} = e_{2n+1}; the rest by Gram-Schmidt over e_1, e_2,
/// ... with f_{2k} = J f_{2k-1}. Throws NotHorizontal if alpha(X) != 0 and
/// DegenerateX if X = 0 or t != |X|.
ScalarMatrix adapted_frame(const SUStructureForms& s, const FrameVector& x, const Scalar& t);

/// Positions (0-based) of the reduced sub-basis f_1..f_{2n-2}, f_{2n+1}.
std::vector<int> reduced_indices(int n);

/// B(Y,Z) = -Q(Y,Z) - Q(X/t, X/t) alpha(Y) alpha(Z) on the reduced sub-basis
/// of the adapted frame. Throws ConditionFails unless dt is in <X _| F, alpha>.
ScalarMatrix reduced_b(const ScalarMatrix& q, const ReductionDatum& d, const SUStructureForms& s);

/// The tensor before the symmetry argument:
/// -Q(Y,Z) - Q(X/t,X/t) alpha(Y) alpha(Z) - 2(-1)^n t^{-1} F(dt^sharp, Y) alpha(Z).
/// Equals reduced_b when the condition holds.
ScalarMatrix assemble_b_pre(const ScalarMatrix& q, const ReductionDatum& d, const SUStructureForms& s);

struct WeingartenData {
  std::vector<FrameVector> basis;
  /// W(y) = -nabla_y nu for each basis vector.
  std::vector<FrameVector> images;
  /// <W(y_a), y_b>.
  ScalarMatrix matrix;
  FrameVector nu;
};

/// Shape operator of the subgroup hypersurface. Throws NotASubalgebra when the
/// span of `subalgebra` is not bracket-closed, and DimensionMismatch when nu
/// is not a unit normal.
WeingartenData subgroup_weingarten(const LieAlgebra& g, const std::vector<FrameVector>& subalgebra,
                                   const FrameVector& nu);

/// -nabla_Y nu.
FrameVector weingarten(const ConnectionData& gamma, const FrameVector& nu, const FrameVector& y);

/// The horizontal one-form A with <A(Y), Z> = <nabla_Y Z, X/t> for Z ranging
/// over the horizontal part (orthogonal to X and nu) of the adapted frame.
FrameVector oneill_a(const ConnectionData& gamma, const ScalarMatrix& frame, int n, const FrameVector& y);

struct AlgebraicReduction {
  LieAlgebra quotient;
  SUStructureForms forms;
  /// Adapted frame used for the quotient coframe.
  ScalarMatrix frame;
};

/// Quotient of the level-set subalgebra by <X>, in the adapted frame. Throws
/// NotReducibleAlgebraically unless the datum marks a subgroup containing X
/// as an ideal.
AlgebraicReduction algebraic_reduce(const LieAlgebra& g, const ReductionDatum& d);

/// Exact square root of a constant square, if any.
std::optional<Scalar> exact_sqrt(const Scalar& s);

}  // namespace geomwb
