#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wpline/pathalg.hpp"

namespace wpline {

// Graded quiver with potential: no loops or 2-cycles, integer arrow degrees,
// homogeneous potential made of cycles.
struct GradedQP {
  Quiver quiver;
  std::vector<int> degree;  // per arrow
  PathPoly potential;       // cyclic terms, rotation-normalized
  int potential_degree = 0;

  void validate(bool allow_two_cycles = false) const;
};

// rotation-normal form of a cyclic path: lexicographically smallest rotation
Path cycle_normalize(const Quiver& q, const Path& p);
PathPoly potential_normalize(const Quiver& q, const PathPoly& W);

int term_degree(const GradedQP& P, const Path& p);

PathPoly cyclic_derivative(const Quiver& q, const PathPoly& W, int arrow);

// Jacobian algebra: quotient by the closed ideal of all cyclic derivatives.
struct GradedFD {
  FDAlgebraData fd;
  std::vector<long> word_degree;       // per basis element
  std::map<long, long> dim_by_degree;  // dimension of each graded piece
};

using JacobianOutcome = std::variant<GradedFD, InfiniteWitness, CapInfo>;

JacobianOutcome jacobian(const GradedQP& P, int cap = 32);
std::vector<PathPoly> jacobian_relations(const GradedQP& P);

// degree-zero part for potentials of degree one: degree-0 arrows with the
// derivatives by degree-1 arrows, terms containing graded arrows removed
AlgebraPresentation truncated_jacobian(const GradedQP& P);

// gldim <= 2 and the defining derivative set is minimal
bool is_algebraic(const GradedQP& P, int cap = 32);

enum class MutationSide { Left, Right };

GradedQP premutate(const GradedQP& P, int k, MutationSide side);
GradedQP reduce(const GradedQP& P);
GradedQP mutate(const GradedQP& P, int k, MutationSide side);
GradedQP mutate_orbit(const GradedQP& P, const std::vector<int>& orbit, MutationSide side);

}  // namespace wpline
