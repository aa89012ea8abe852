#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpline/qp.hpp"

namespace wpline {

struct ExchangeOptions {
  int max_nodes = 500;
  int cap = 16;
  bool nakayama_orbits = true;  // mutate along the Nakayama orbits when selfinjective
};

struct ExchangeNode {
  GradedQP qp;
  bool jacobian_finite = false;
  bool selfinjective = false;
  long total_dim = -1;
  std::map<long, long> dims;              // graded dimensions when finite
  std::vector<std::vector<long>> cartan;  // Jacobian Cartan matrix when finite
  std::vector<std::vector<int>> orbits;   // mutation units applied from here
};

struct ExchangeEdge {
  int from = -1;
  int to = -1;
  std::vector<int> orbit;
};

struct ExchangeResult {
  std::vector<ExchangeNode> nodes;
  std::vector<ExchangeEdge> edges;
  bool truncated = false;  // hit max_nodes before closing
  std::vector<std::string> warnings;
};

// Breadth-first closure under (left) orbit mutation, deduplicated by graded
// quiver isomorphism together with the graded Jacobian dimensions.
ExchangeResult explore_exchange(const GradedQP& start, const ExchangeOptions& opt = {});

}  // namespace wpline
