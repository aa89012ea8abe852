#pragma once

#include "wpline/pathalg.hpp"
#include "wpline/sheaf.hpp"

namespace wpline {

// Endomorphism algebra of a basic sum of line-bundle twists and exceptional
// simple sheaves, as a quiver with a minimal set of admissible relations.
// Morphism spaces are realized inside R (monomial bases between twists) and
// through the canonical quotients onto simples (tube germs); arrows are coset
// representatives of rad/rad^2 and relations minimally generate the kernel of
// the induced path-algebra surjection.
AlgebraPresentation end_algebra(const Weights& w, const SheafSum& T);

// Total Hom dimension over all ordered pairs of summands; the dimension the
// presentation must reproduce.
long end_algebra_dim(const Weights& w, const SheafSum& T);

}  // namespace wpline
