#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wpline/linalg.hpp"
#include "wpline/ring.hpp"

using namespace wpline;

namespace {

// Independent dimension oracle: enumerate all raw monomials of degree a in
// K[x_1..x_t], express each in the reduced basis by rewriting, and take the
// rank of the resulting coefficient matrix.
long dim_R_bruteforce(const Weights& w, const LVec& a) {
  long target = lv_delta(w, a);
  if (target < 0) return 0;
  std::vector<long> degs(w.count());
  for (int i = 0; i < w.count(); ++i) degs[i] = w.lcm() / w.p(i);

  std::vector<std::vector<int>> raw;
  std::vector<int> cur(w.count(), 0);
  // enumerate exponent vectors with sum e_i * delta(x_i) == delta(a)
  auto rec = [&](auto&& self, int pos, long remaining) -> void {
    if (pos == w.count()) {
      if (remaining == 0) {
        std::vector<long> coeffs(cur.begin(), cur.end());
        if (lv_make(w, 0, coeffs) == a) raw.push_back(cur);
      }
      return;
    }
    for (int e = 0; e * degs[pos] <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e * degs[pos]);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, target);

  auto basis = r_basis(w, a);
  std::map<RMonomial, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  QMat rows;
  for (const auto& e : raw) {
    std::map<RMonomial, Rat> reduced;
    reduce_into(w, e, Rat(1), reduced);
    QVec row(basis.size(), Rat(0));
    for (const auto& [m, c] : reduced) {
      auto it = index.find(m);
      REQUIRE(it != index.end());
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

}  // namespace

TEST_CASE("dimension formula") {
  SUBCASE("constants") {
    Weights w({2, 3, 6});
    CHECK(dim_R(w, lv_zero(w)) == 1);
  }
  SUBCASE("(2,2,4) values used by the Hom tables") {
    Weights w({2, 2, 4});
    CHECK(dim_R(w, lv_x(w, 0)) == 1);
    CHECK(dim_R(w, lv_add(w, lv_x(w, 0), lv_x(w, 1))) == 1);
    CHECK(dim_R(w, lv_omega(w)) == 0);
  }
  SUBCASE("vanishing outside the positive cone") {
    Weights w({2, 3, 6});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<long> c(3);
      for (auto& v : c) v = static_cast<long>(rng() % 15) - 7;
      LVec a = lv_make(w, static_cast<long>(rng() % 7) - 3, c);
      if (lv_is_nonneg(a))
        CHECK(dim_R(w, a) >= 1);
      else
        CHECK(dim_R(w, a) == 0);
      CHECK(dim_R(w, a) == static_cast<long>(r_basis(w, a).size()));
    }
  }
}

TEST_CASE("dimension agrees with brute-force rewriting rank") {
  for (auto ws : {std::vector<int>{2, 2, 4}, {2, 3, 6}, {2, 2, 2, 2}, {2, 3, 5}}) {
    Weights w(ws);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long> c(w.count());
      for (auto& v : c) v = static_cast<long>(rng() % 5) - 1;
      LVec a = lv_make(w, static_cast<long>(rng() % 4) - 1, c);
      if (lv_delta(w, a) > 3 * w.lcm()) continue;  // keep the enumeration small
      CHECK(dim_R(w, a) == dim_R_bruteforce(w, a));
    }
  }
}

TEST_CASE("multiplication") {
  SUBCASE("unit") {
    Weights w({2, 3, 6});
    RMonomial one{std::vector<int>(3, 0)};
    RMonomial x{{1, 0, 0}};
    RElement u = r_monomial(w, x);
    CHECK(r_multiply(w, r_monomial(w, one), u).terms == u.terms);
  }
  SUBCASE("(2,2,2) canonical relation: x3*x3 = x2^2 - x1^2") {
    Weights w({2, 2, 2});
    RElement z = r_monomial(w, RMonomial{{0, 0, 1}});
    RElement sq = r_multiply(w, z, z);
    REQUIRE(sq.terms.size() == 2);
    CHECK(sq.terms.at(RMonomial{{0, 2, 0}}) == 1);
    CHECK(sq.terms.at(RMonomial{{2, 0, 0}}) == -1);
  }
  SUBCASE("commutativity") {
    Weights w({2, 3, 6});
    RElement a = r_monomial(w, RMonomial{{1, 0, 0}});
    RElement b = r_monomial(w, RMonomial{{0, 1, 0}});
    CHECK(r_multiply(w, a, b).terms == r_multiply(w, b, a).terms);
  }
  SUBCASE("products of graded pieces stay in the reduced basis") {
    Weights w({2, 2, 4});
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long> c(3), d(3);
      for (auto& v : c) v = static_cast<long>(rng() % 4);
      for (auto& v : d) v = static_cast<long>(rng() % 4);
      LVec da = lv_make(w, static_cast<long>(rng() % 3), c);
      LVec db = lv_make(w, static_cast<long>(rng() % 3), d);
      auto ba = r_basis(w, da);
      auto bb = r_basis(w, db);
      auto target = r_basis(w, lv_add(w, da, db));
      std::set<RMonomial> allowed(target.begin(), target.end());
      for (const auto& ma : ba)
        for (const auto& mb : bb) {
          RElement prod = r_multiply(w, r_monomial(w, ma), r_monomial(w, mb));
          CHECK(prod.degree == lv_add(w, da, db));
          for (const auto& [m, cf] : prod.terms) CHECK(allowed.count(m) == 1);
        }
    }
  }
}

TEST_CASE("tube germs") {
  Weights w({2, 2, 4});  // x, y, z with 2x = 2y = 4z = c
  LVec z = lv_x(w, 2);
  SUBCASE("canonical monomial of degree -z at the second point") {
    TubeMonomial mu = tube_canonical(w, 1, lv_neg(w, z));
    CHECK(mu.e == std::vector<int>{-2, 0, 3});
  }
  SUBCASE("transport is multiplicative along compositions") {
    // germ degrees are one-dimensional, so transported scalars compose
    RElement f = r_monomial(w, RMonomial{{0, 0, 1}});  // z
    LVec v = lv_neg(w, lv_scale(w, 2, z));
    Rat s1 = transport_scalar(w, 1, v, f);
    LVec v2 = lv_add(w, v, f.degree);
    Rat s2 = transport_scalar(w, 1, v2, f);
    RElement f2 = r_multiply(w, f, f);
    CHECK(transport_scalar(w, 1, v, f2) == s1 * s2);
  }
  SUBCASE("x_tube-divisible elements vanish") {
    RElement y = r_monomial(w, RMonomial{{0, 1, 0}});
    CHECK(transport_scalar(w, 1, lv_zero(w), y) == 0);
  }
}
