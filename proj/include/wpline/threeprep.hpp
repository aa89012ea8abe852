#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpline/qp.hpp"

namespace wpline {

// Extended quiver of a presentation of global dimension <= 2 with minimal
// relations: one degree-1 arrow r* from t(r) to s(r) per relation, potential
// sum r r* of degree 1.
struct ExtendedQP {
  GradedQP qp;
  std::vector<int> relation_arrow;  // arrow id of r_i* in qp.quiver
  AlgebraPresentation source;
};

ExtendedQP extended_qp(const AlgebraPresentation& A, int cap = 32);

// 3-preprojective algebra as the graded Jacobian algebra of the extended QP.
JacobianOutcome pi3(const AlgebraPresentation& A, int cap = 32);

enum class TriState { False, True, Indeterminate };

struct TwoRFResult {
  TriState value = TriState::Indeterminate;
  std::string reason;
  std::optional<std::vector<int>> nakayama;  // set when Pi3 is selfinjective
  std::optional<long> pi3_dim;
};

// 2-representation-finiteness: gldim exactly 2 and Pi3 finite dimensional
// selfinjective. Cap exhaustion yields Indeterminate, never False.
TwoRFResult is_2rf(const AlgebraPresentation& A, int cap = 32);

// nu_2^{-1}(Lambda) is a module and injective: Ext^0 and Ext^1 of DL into L
// vanish and Ext^2 with its induced module structure is injective.
bool is_2homogeneous(const AlgebraPresentation& A, int cap = 32);

struct TwoAprResult {
  AlgebraPresentation algebra;
  TriState input_2rf = TriState::Indeterminate;
  TriState output_2rf = TriState::Indeterminate;
};

// Reflection at a sink (Left) or source (Right): degree flip on the arrows of
// the extended QP incident to k, then truncation. The defining Hom/Ext
// vanishing conditions are verified computationally before reflecting.
TwoAprResult two_apr_tilt(const AlgebraPresentation& A, int k, MutationSide side, int cap = 32);

struct NormalizeTrace {
  AlgebraPresentation algebra;
  std::vector<std::pair<int, MutationSide>> steps;
  bool reached_2homogeneous = false;
};

// Breadth-first search through admissible reflections until a 2-homogeneous
// algebra appears or the budget runs out.
NormalizeTrace iterated_2apr_normalize(const AlgebraPresentation& A, int budget, int cap = 32);

AlgebraPresentation opposite_presentation(const AlgebraPresentation& A);

}  // namespace wpline
