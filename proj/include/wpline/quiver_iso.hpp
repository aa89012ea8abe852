#pragma once

#include <functional>
#include <vector>

#include "wpline/pathalg.hpp"

namespace wpline {

// Backtracking isomorphism search on vertex-pair weight matrices: looks for a
// permutation matching every given matrix simultaneously (arrow counts,
// Cartan entries, ...). Small quivers only.
bool matrices_isomorphic(const std::vector<std::vector<std::vector<long>>>& a,
                         const std::vector<std::vector<std::vector<long>>>& b,
                         std::vector<int>* perm_out = nullptr);

// Enumerates matching permutations until the callback returns true.
bool matrices_isomorphic_any(const std::vector<std::vector<std::vector<long>>>& a,
                             const std::vector<std::vector<std::vector<long>>>& b,
                             const std::function<bool(const std::vector<int>&)>& accept);

bool quiver_isomorphic(const Quiver& a, const Quiver& b, std::vector<int>* perm_out = nullptr);

std::vector<std::vector<long>> arrow_count_matrix(const Quiver& q);

// Dedup proxy for presentations: quiver isomorphism + relation count +
// Cartan matrix along the same permutation.
bool presentation_equivalent(const AlgebraPresentation& a, const AlgebraPresentation& b,
                             int cap = 32);

}  // namespace wpline
