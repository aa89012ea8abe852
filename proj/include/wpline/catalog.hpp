#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpline/endalg.hpp"
#include "wpline/pathalg.hpp"

namespace wpline {

struct CatalogEntry {
  std::string name;
  std::string provenance;  // what the entry encodes, mathematically
  std::optional<Weights> weights;
  AlgebraPresentation algebra;
};

// canonical algebra End of the canonical tilting bundle
AlgebraPresentation canonical_algebra(const Weights& w);

// Reference presentation of the canonical algebra of type (2,2,2,2;lambda):
// two arms of squares with one commutativity-type relation per extra weight.
AlgebraPresentation canonical_2222_reference(const Rat& lambda);

// Endomorphism algebra of the tau^2-stable tilting sheaf over weight type
// (2,4,4) whose reduced summands live over (2,2,4): a 3x3 grid of nine
// summands including one rank-2 bundle and two simple sheaves, with two
// commutativity and two zero relations.
AlgebraPresentation grid_244_algebra();

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_get(const std::string& name);

}  // namespace wpline
