#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpline/ring.hpp"

namespace wpline {

// Line-bundle twist O(a) or exceptional simple sheaf S_{i,m} at the i-th
// marked point (0-indexed tube, index m in 1..p_i).
struct SheafSymbol {
  enum class Kind { Line, Simple };
  Kind kind = Kind::Line;
  LVec twist;     // Line
  int tube = -1;  // Simple
  int index = 0;  // Simple, 1..p_i

  auto operator<=>(const SheafSymbol&) const = default;
  bool operator==(const SheafSymbol&) const = default;
};

SheafSymbol line_bundle(const LVec& a);
SheafSymbol exc_simple(const Weights& w, int tube, int index);

std::string symbol_str(const SheafSymbol& s);                      // O(m|..) / S(i,m), 1-indexed tube
SheafSymbol symbol_parse(const Weights& w, const std::string& s);

// Formal integer combination of symbol classes in K_0.
struct K0Class {
  std::map<SheafSymbol, long> coeff;
};

K0Class k0_of(const SheafSymbol& s);
K0Class k0_add(const K0Class& a, const K0Class& b);
K0Class k0_scale(long k, const K0Class& a);
long k0_rank(const K0Class& x);
long k0_degree(const Weights& w, const K0Class& x);

long hom_dim(const Weights& w, const SheafSymbol& X, const SheafSymbol& Y);
long ext1_dim(const Weights& w, const SheafSymbol& X, const SheafSymbol& Y);

SheafSymbol tau(const Weights& w, const SheafSymbol& X);
SheafSymbol tau_k(const Weights& w, const SheafSymbol& X, long k);

long euler_form(const Weights& w, const K0Class& x, const K0Class& y);

// slope = deg/rk; nullopt encodes the infinite slope of torsion classes.
std::optional<Rat> slope(const Weights& w, const K0Class& x);

// Multiset of symbols; kept sorted.
struct SheafSum {
  std::vector<SheafSymbol> items;

  void normalize();
  bool is_basic() const;  // multiplicity-free
  bool operator==(const SheafSum&) const = default;
};

long tilting_rank(const Weights& w);  // 2 + sum (p_i - 1)

bool is_rigid(const Weights& w, const SheafSum& T);
bool is_tilting(const Weights& w, const SheafSum& T);
bool is_tau2_stable(const Weights& w, const SheafSum& T);

long cluster_hom_dim(const Weights& w, const SheafSymbol& X, const SheafSymbol& Y);

// All twists O(v) with 0 <= v <= c; the canonical tilting bundle.
SheafSum canonical_sum(const Weights& w);

// Twists v with lo <= v <= hi.
std::vector<LVec> window_twists(const Weights& w, const LVec& lo, const LVec& hi);

}  // namespace wpline
