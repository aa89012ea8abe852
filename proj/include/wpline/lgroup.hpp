#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpline/rational.hpp"

namespace wpline {

// Weight data of a weighted projective line: weights p_1..p_t (t >= 3, p_i >= 1)
// together with the marked points on the projective line. The first three
// points are normalized to infinity, 0 and 1; further points are user-chosen
// rationals, pairwise distinct and different from 0 and 1.
class Weights {
 public:
  explicit Weights(std::vector<int> p, std::vector<Rat> extra_lambda = {});

  int count() const { return static_cast<int>(p_.size()); }  // t
  int p(int i) const { return p_[i]; }                       // 0-indexed weight
  long lcm() const { return lcm_; }
  // lambda(i) for i >= 1; lambda(1) = 0, lambda(2) = 1, the rest user values.
  // lambda(0) is the point at infinity and may not be requested.
  const Rat& lambda(int i) const;

  bool operator==(const Weights& o) const { return p_ == o.p_ && lambda_ == o.lambda_; }
  std::string str() const;

  // "2,3,6" or "2,2,2,2;lambda4=5/2" (lambda5=..., separated by ';').
  static Weights parse(const std::string& text);

 private:
  std::vector<int> p_;
  std::vector<Rat> lambda_;  // index 0 unused
  long lcm_ = 1;
};

// Element of the rank-1 group L(p) in its unique normal form
// m*c + sum_i m_i x_i with 0 <= m_i < p_i.
struct LVec {
  long m = 0;
  std::vector<int> mi;

  bool operator==(const LVec&) const = default;
  auto operator<=>(const LVec&) const = default;
};

LVec lv_zero(const Weights& w);
LVec lv_c(const Weights& w);
LVec lv_x(const Weights& w, int i);  // generator x_i, 0-indexed
LVec lv_make(const Weights& w, long m, const std::vector<long>& coeffs);  // renormalizes

LVec lv_add(const Weights& w, const LVec& a, const LVec& b);
LVec lv_neg(const Weights& w, const LVec& a);
LVec lv_sub(const Weights& w, const LVec& a, const LVec& b);
LVec lv_scale(const Weights& w, long k, const LVec& a);

// Dualizing element (t-2)c - sum_i x_i.
LVec lv_omega(const Weights& w);

// The degree homomorphism determined by x_i -> p/p_i (so c -> p).
long lv_delta(const Weights& w, const LVec& a);

// Euler characteristic, computed as -delta(omega)/p.
Rat euler_char(const Weights& w);

// Membership in the positive cone sum N x_i; in normal form this is m >= 0.
bool lv_is_nonneg(const LVec& a);
bool lv_leq(const Weights& w, const LVec& a, const LVec& b);

// Least k >= 1 with k*a = 0, or nullopt when a has infinite order.
std::optional<long> lv_order(const Weights& w, const LVec& a);

bool is_tubular(const Weights& w);

std::string lv_str(const LVec& a);                       // "m|m1,...,mt"
LVec lv_parse(const Weights& w, const std::string& s);   // accepts the same form

void check_same_type(const Weights& w, const LVec& a);   // throws domain_error

}  // namespace wpline
