#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wpline/sheaf.hpp"

using namespace wpline;

namespace {

// Residue-rule oracle for Hom(O(a), S_{i,m}): twisting moves the canonical
// quotient O ->> S_{i,1} to O(a) ->> S_{i,1-a_i}, so a nonzero morphism exists
// exactly when m = 1 - a_i mod p_i, and then the space is one-dimensional.
long hom_line_simple_residue(const Weights& w, const LVec& a, int tube, int index) {
  int p = w.p(tube);
  return ((index - 1 + a.mi[tube]) % p + p) % p == 0 ? 1 : 0;
}

std::vector<SheafSymbol> sample_symbols(const Weights& w, std::mt19937& rng, int n) {
  std::vector<SheafSymbol> out;
  for (int k = 0; k < n; ++k) {
    if (rng() % 3 == 0) {
      int tube;
      do {
        tube = static_cast<int>(rng() % w.count());
      } while (w.p(tube) < 2);
      out.push_back(exc_simple(w, tube, 1 + static_cast<int>(rng() % w.p(tube))));
    } else {
      std::vector<long> c(w.count());
      for (auto& v : c) v = static_cast<long>(rng() % 7) - 3;
      out.push_back(line_bundle(lv_make(w, static_cast<long>(rng() % 5) - 2, c)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Hom dimensions from the (2,2,4) computation") {
  Weights w({2, 2, 4});
  LVec x = lv_x(w, 0), y = lv_x(w, 1), z = lv_x(w, 2);
  LVec om = lv_omega(w);
  SheafSymbol S = exc_simple(w, 1, 1);   // cokernel of O(-y) -> O
  SheafSymbol S2 = exc_simple(w, 1, 2);  // cokernel of O(-2y) -> O(-y)
  auto L = [&](const LVec& v) { return line_bundle(v); };
  auto plus = [&](const LVec& a, const LVec& b) { return lv_add(w, a, b); };

  CHECK(hom_dim(w, L(z), S) == 1);
  CHECK(hom_dim(w, L(z), S2) == 0);
  CHECK(hom_dim(w, L(plus(x, om)), S) == 0);
  CHECK(hom_dim(w, L(plus(x, om)), S2) == 1);
  CHECK(hom_dim(w, L(plus(x, lv_scale(w, 3, om))), S) == 0);
  CHECK(hom_dim(w, L(plus(x, lv_scale(w, 3, om))), S2) == 1);
  CHECK(hom_dim(w, L(plus(y, lv_scale(w, 2, om))), S) == 0);
  CHECK(hom_dim(w, L(plus(y, lv_scale(w, 2, om))), S2) == 1);
  CHECK(hom_dim(w, L(plus(z, lv_scale(w, 2, om))), S) == 1);
  CHECK(hom_dim(w, L(plus(z, lv_scale(w, 2, om))), S2) == 0);
  CHECK(hom_dim(w, L(lv_zero(w)), S) == 1);
  CHECK(hom_dim(w, L(lv_zero(w)), S2) == 0);

  SUBCASE("rank-2 class U = [O(omega)] + [O(z)]") {
    K0Class U = k0_add(k0_of(L(om)), k0_of(L(z)));
    CHECK(euler_form(w, U, k0_of(S)) == 1);
    CHECK(euler_form(w, U, k0_of(S2)) == 1);
  }
  SUBCASE("Ext values inside the same computation") {
    CHECK(ext1_dim(w, L(z), L(lv_neg(w, y))) == 1);
    CHECK(ext1_dim(w, L(z), L(lv_zero(w))) == 0);
  }
}

TEST_CASE("tau") {
  SUBCASE("tau^2 is the identity for (2,2,2,2)") {
    Weights w({2, 2, 2, 2});
    std::mt19937 rng(3);
    for (auto X : sample_symbols(w, rng, 50)) CHECK(tau_k(w, tau_k(w, X, 1), 1) == X);
  }
  SUBCASE("index wrap on simples") {
    Weights w({2, 3, 6});
    CHECK(tau(w, exc_simple(w, 1, 3)) == exc_simple(w, 1, 1));
    CHECK(tau_k(w, exc_simple(w, 1, 1), -1) == exc_simple(w, 1, 3));
    // direction pinned by the Euler form: ext1(S_m, S_{m+1}) = 1
    CHECK(euler_form(w, k0_of(exc_simple(w, 1, 1)), k0_of(exc_simple(w, 1, 2))) == -1);
    CHECK(euler_form(w, k0_of(exc_simple(w, 1, 2)), k0_of(exc_simple(w, 1, 1))) == 0);
  }
  SUBCASE("(2,4,4): tau^4 fixes every twist") {
    Weights w({2, 4, 4});
    CHECK(tau_k(w, line_bundle(lv_zero(w)), 4) == line_bundle(lv_zero(w)));
  }
}

TEST_CASE("Serre duality and Euler form properties") {
  std::mt19937 rng(17);
  for (auto ws : {std::vector<int>{2, 2, 4}, {2, 3, 6}, {2, 2, 2, 2}, {2, 3, 5}}) {
    Weights w(ws);
    auto syms = sample_symbols(w, rng, 12);
    for (const auto& X : syms)
      for (const auto& Y : syms) {
        CHECK(ext1_dim(w, X, Y) == hom_dim(w, Y, tau(w, X)));
        CHECK(euler_form(w, k0_of(X), k0_of(Y)) == hom_dim(w, X, Y) - ext1_dim(w, X, Y));
      }
  }
}

TEST_CASE("tube Ext pattern for simples") {
  Weights w({2, 3, 6});
  for (int tube = 0; tube < 3; ++tube) {
    int p = w.p(tube);
    for (int m = 1; m <= p; ++m)
      for (int m2 = 1; m2 <= p; ++m2) {
        long e = ext1_dim(w, exc_simple(w, tube, m), exc_simple(w, tube, m2));
        bool adjacent = (m2 - 1) % p == m % p;  // m' = m + 1 in the tube
        CHECK(e == (adjacent ? 1 : 0));
        // cross-check against the Euler form, which is SES-derived
        long chi = euler_form(w, k0_of(exc_simple(w, tube, m)), k0_of(exc_simple(w, tube, m2)));
        long hom = (m == m2) ? 1 : 0;
        CHECK(e == hom - chi);
      }
  }
  SUBCASE("exceptional simples are rigid") {
    CHECK(ext1_dim(w, exc_simple(w, 2, 4), exc_simple(w, 2, 4)) == 0);
  }
  SUBCASE("no extensions from lines to simples") {
    std::mt19937 rng(23);
    for (auto X : sample_symbols(w, rng, 20))
      if (X.kind == SheafSymbol::Kind::Line)
        for (int m = 1; m <= 6; ++m) CHECK(ext1_dim(w, X, exc_simple(w, 2, m)) == 0);
  }
}

TEST_CASE("hom from lines to simples follows the residue rule") {
  std::mt19937 rng(41);
  for (auto ws : {std::vector<int>{2, 2, 4}, {2, 3, 6}, {3, 3, 3}}) {
    Weights w(ws);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long> c(w.count());
      for (auto& v : c) v = static_cast<long>(rng() % 9) - 4;
      LVec a = lv_make(w, static_cast<long>(rng() % 5) - 2, c);
      int tube;
      do {
        tube = static_cast<int>(rng() % w.count());
      } while (w.p(tube) < 2);
      int m = 1 + static_cast<int>(rng() % w.p(tube));
      CHECK(hom_dim(w, line_bundle(a), exc_simple(w, tube, m)) ==
            hom_line_simple_residue(w, a, tube, m));
    }
  }
}

TEST_CASE("slope") {
  Weights w({2, 3, 7});
  SUBCASE("line bundles") {
    CHECK(slope(w, k0_of(line_bundle(lv_zero(w)))) == Rat(0));
    CHECK(slope(w, k0_of(line_bundle(lv_omega(w)))) == Rat(1));  // delta(omega) = 1
  }
  SUBCASE("torsion classes have infinite slope") {
    CHECK_FALSE(slope(w, k0_of(exc_simple(w, 2, 3))).has_value());
  }
  SUBCASE("zero class rejected") {
    K0Class zero;
    CHECK_THROWS_AS(slope(w, zero), std::domain_error);
  }
  SUBCASE("slope shift under tau") {
    std::mt19937 rng(11);
    for (auto ws : {std::vector<int>{2, 3, 7}, {2, 3, 6}, {2, 2, 2}}) {
      Weights w2(ws);
      long shift = lv_delta(w2, lv_omega(w2));
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<long> c(w2.count());
        for (auto& v : c) v = static_cast<long>(rng() % 7) - 3;
        LVec a = lv_make(w2, static_cast<long>(rng() % 5) - 2, c);
        auto s0 = slope(w2, k0_of(line_bundle(a)));
        auto s1 = slope(w2, k0_of(tau(w2, line_bundle(a))));
        REQUIRE(s0.has_value());
        REQUIRE(s1.has_value());
        CHECK(*s1 - *s0 == Rat(shift));
      }
    }
  }
}

TEST_CASE("rank and degree on K0") {
  Weights w({2, 2, 4});
  CHECK(k0_rank(k0_of(line_bundle(lv_zero(w)))) == 1);
  CHECK(k0_rank(k0_of(exc_simple(w, 2, 1))) == 0);
  CHECK(k0_degree(w, k0_of(exc_simple(w, 2, 1))) == 1);   // p/p_3 = 4/4
  CHECK(k0_degree(w, k0_of(exc_simple(w, 0, 1))) == 2);   // p/p_1 = 4/2
  // degree via the defining sequence matches the direct formula
  LVec xi = lv_x(w, 0);
  K0Class diff = k0_add(k0_of(line_bundle(lv_zero(w))),
                        k0_scale(-1, k0_of(line_bundle(lv_neg(w, xi)))));
  CHECK(k0_degree(w, diff) == k0_degree(w, k0_of(exc_simple(w, 0, 1))));
}

TEST_CASE("rigidity and tilting") {
  SUBCASE("canonical sum is tilting for small weight types") {
    for (auto ws : {std::vector<int>{2, 2, 2}, {2, 3, 4}, {2, 2, 2, 2}, {2, 3, 6}, {2, 4, 4},
                    {3, 3, 3}, {2, 3, 7}, {1, 4, 4}}) {
      Weights w(ws);
      if (w.lcm() > 8) continue;
      CHECK(is_tilting(w, canonical_sum(w)));
    }
  }
  SUBCASE("non-basic sums are rejected") {
    Weights w({2, 2, 2, 2});
    SheafSum T;
    T.items = {line_bundle(lv_zero(w)), line_bundle(lv_zero(w))};
    CHECK_FALSE(is_tilting(w, T));
  }
  SUBCASE("{O, O(omega)} in (2,3,6) is not rigid") {
    Weights w({2, 3, 6});
    SheafSum T;
    T.items = {line_bundle(lv_zero(w)), line_bundle(lv_omega(w))};
    T.normalize();
    CHECK_FALSE(is_rigid(w, T));
  }
}

TEST_CASE("tau^2 stability of sums") {
  SUBCASE("(2,2,2,2): everything is stable") {
    Weights w({2, 2, 2, 2});
    std::mt19937 rng(8);
    SheafSum T;
    T.items = sample_symbols(w, rng, 6);
    T.normalize();
    CHECK(is_tau2_stable(w, T));
  }
  SUBCASE("(2,4,4) two-cycle and singleton") {
    Weights w({2, 4, 4});
    LVec om2 = lv_scale(w, 2, lv_omega(w));
    SheafSum pair;
    pair.items = {line_bundle(lv_zero(w)), line_bundle(om2)};
    pair.normalize();
    CHECK(is_tau2_stable(w, pair));
    SheafSum single;
    single.items = {line_bundle(lv_zero(w))};
    CHECK_FALSE(is_tau2_stable(w, single));
  }
}

TEST_CASE("cluster Hom dimensions") {
  SUBCASE("(2,2,2,2): endomorphisms in the orbit category") {
    Weights w({2, 2, 2, 2});
    SheafSymbol X = line_bundle(lv_zero(w));
    CHECK(cluster_hom_dim(w, X, X) == 2);
  }
  SUBCASE("lower bound by plain Hom") {
    Weights w({2, 4, 4});
    SheafSymbol a = line_bundle(lv_zero(w));
    SheafSymbol b = line_bundle(lv_c(w));
    CHECK(cluster_hom_dim(w, a, b) >= hom_dim(w, a, b));
  }
  SUBCASE("(2,4,4) symmetry of the 2-Calabi-Yau form") {
    Weights w({2, 4, 4});
    SheafSymbol a = line_bundle(lv_zero(w));
    SheafSymbol b = line_bundle(lv_scale(w, 2, lv_omega(w)));
    CHECK(cluster_hom_dim(w, a, b) == cluster_hom_dim(w, b, a));
  }
}

TEST_CASE("symbol text round trip") {
  Weights w({2, 2, 4});
  for (const char* txt : {"O(0|0,0,0)", "O(-1|1,0,3)", "S(2,1)", "S(3,4)"}) {
    SheafSymbol s = symbol_parse(w, txt);
    CHECK(symbol_parse(w, symbol_str(s)) == s);
  }
}
