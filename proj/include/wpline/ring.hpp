#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpline/lgroup.hpp"

namespace wpline {

// Monomial x_0^{e0} ... x_{t-1}^{e_{t-1}}. Reduced form keeps e_i < p_i for
// i >= 2; the first two exponents are free.
struct RMonomial {
  std::vector<int> e;
  auto operator<=>(const RMonomial&) const = default;
  bool operator==(const RMonomial&) const = default;
};

// Homogeneous element of R(lambda,p) as a reduced-monomial combination.
struct RElement {
  LVec degree;
  std::map<RMonomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }
};

LVec mono_degree(const Weights& w, const RMonomial& m);
std::string mono_str(const Weights& w, const RMonomial& m);

// Dimension of the homogeneous piece R_a: the reduced monomials of degree a
// are parametrized by splitting the c-part of a between the first two
// variables, so dim R_a = max(0, m+1) in normal form.
long dim_R(const Weights& w, const LVec& a);

// Reduced monomial basis of R_a, in increasing monomial order.
std::vector<RMonomial> r_basis(const Weights& w, const LVec& a);

RElement r_zero(const Weights& w, const LVec& degree);
RElement r_monomial(const Weights& w, const RMonomial& m, const Rat& c = Rat(1));
RElement r_add(const Weights& w, const RElement& u, const RElement& v);
RElement r_scale(const RElement& u, const Rat& c);
RElement r_multiply(const Weights& w, const RElement& u, const RElement& v);

// Rewrites x_i^{p_i} -> x_1^{p_1} - lambda_i x_0^{p_0} for i >= 2 until all
// bounded exponents are in range; used by r_multiply and exposed for tests.
void reduce_into(const Weights& w, std::vector<int> expo, Rat coeff,
                 std::map<RMonomial, Rat>& out);

// ---- germs along a weighted point -------------------------------------------------
//
// Morphisms from line bundles to the simple sheaves concentrated at the i-th
// point compose through the quotient ring R/(x_i). Its homogeneous pieces in
// degrees with vanishing i-th residue are one-dimensional, so a morphism is a
// scalar against a canonical Laurent monomial. transport_scalar computes the
// scalar picked up when precomposing with a line-bundle map.

// Laurent monomial in the variables other than x_i; the pivot variable
// (x_0, or x_1 when i = 0) may carry a negative exponent.
struct TubeMonomial {
  std::vector<int> e;
};

// Canonical monomial of degree v in R/(x_i); requires v.mi[i] == 0.
TubeMonomial tube_canonical(const Weights& w, int tube, const LVec& v);

// Scalar s with  mu_{v}| * germ(f) = s * mu_{v + deg f}  in R/(x_i), where f
// is a homogeneous element of R and germ drops the x_i-divisible part.
// Returns 0 when the germ vanishes (in particular when deg f has nonzero
// i-th residue).
Rat transport_scalar(const Weights& w, int tube, const LVec& v, const RElement& f);

}  // namespace wpline
