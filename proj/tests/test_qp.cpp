#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wpline/qp.hpp"
#include "wpline/quiver_iso.hpp"

using namespace wpline;

namespace {

Path word(const Quiver& q, std::initializer_list<const char*> names) {
  Path p;
  for (auto n : names) p.as.push_back(q.arrow_id(n));
  p.src = q.arrows[p.as.front()].src;
  return p;
}

GradedQP three_cycle(int deg_a, int deg_b, int deg_c) {
  GradedQP P;
  Quiver& q = P.quiver;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  P.degree = {deg_a, deg_b, deg_c};
  P.potential.add_term(word(q, {"a", "b", "c"}), Rat(1));
  P.potential = potential_normalize(q, P.potential);
  P.potential_degree = deg_a + deg_b + deg_c;
  return P;
}

std::map<long, long> jac_dims(const GradedQP& P, int cap = 16) {
  auto out = jacobian(P, cap);
  auto* g = std::get_if<GradedFD>(&out);
  REQUIRE(g != nullptr);
  return g->dim_by_degree;
}

}  // namespace

TEST_CASE("cyclic derivatives") {
  SUBCASE("single occurrence and rotation") {
    GradedQP P = three_cycle(0, 0, 1);
    const Quiver& q = P.quiver;
    PathPoly W = P.potential;
    PathPoly da = cyclic_derivative(q, W, q.arrow_id("a"));
    REQUIRE(da.terms.size() == 1);
    CHECK(da.terms.begin()->first == word(q, {"b", "c"}));
    PathPoly db = cyclic_derivative(q, W, q.arrow_id("b"));
    REQUIRE(db.terms.size() == 1);
    CHECK(db.terms.begin()->first == word(q, {"c", "a"}));
  }
  SUBCASE("repeated occurrences: d_a(abac) = bac + cab") {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 1, 0);
    q.add_arrow("c", 1, 0);
    PathPoly W;
    W.add_term(word(q, {"a", "b", "a", "c"}), Rat(1));
    PathPoly da = cyclic_derivative(q, W, q.arrow_id("a"));
    PathPoly expect;
    expect.add_term(word(q, {"b", "a", "c"}), Rat(1));
    expect.add_term(word(q, {"c", "a", "b"}), Rat(1));
    CHECK(da.terms == expect.terms);
  }
  SUBCASE("linearity and rotation invariance") {
    GradedQP P = three_cycle(0, 0, 1);
    const Quiver& q = P.quiver;
    PathPoly W1 = P.potential;
    Path rotated = word(q, {"b", "c", "a"});
    PathPoly W2;
    W2.add_term(cycle_normalize(q, rotated), Rat(1));
    for (const char* n : {"a", "b", "c"}) {
      int a = q.arrow_id(n);
      CHECK(cyclic_derivative(q, W1, a).terms == cyclic_derivative(q, W2, a).terms);
    }
  }
}

TEST_CASE("jacobian algebras") {
  SUBCASE("3-cycle with W = abc has dimension 6") {
    GradedQP P = three_cycle(0, 0, 1);
    auto dims = jac_dims(P);
    long total = 0;
    for (auto& [d, n] : dims) total += n;
    CHECK(total == 6);
    CHECK(dims.at(0) == 5);  // vertices + a + b
    CHECK(dims.at(1) == 1);  // c
  }
  SUBCASE("zero potential on an acyclic quiver gives the path algebra") {
    GradedQP P;
    P.quiver.add_vertex("1");
    P.quiver.add_vertex("2");
    P.quiver.add_arrow("a", 0, 1);
    P.degree = {0};
    P.potential_degree = 1;
    auto dims = jac_dims(P);
    long total = 0;
    for (auto& [d, n] : dims) total += n;
    CHECK(total == 3);
  }
}

TEST_CASE("truncated Jacobian algebras") {
  SUBCASE("3-cycle truncates to a zero relation") {
    GradedQP P = three_cycle(0, 0, 1);
    AlgebraPresentation t = truncated_jacobian(P);
    CHECK(t.quiver.arrows.size() == 2);
    REQUIRE(t.relations.size() == 1);
    REQUIRE(t.relations[0].terms.size() == 1);
    const Path& p = t.relations[0].terms.begin()->first;
    CHECK(p.as == std::vector<int>{t.quiver.arrow_id("a"), t.quiver.arrow_id("b")});
  }
  SUBCASE("no graded arrows: truncation is the path algebra") {
    GradedQP P;
    P.quiver.add_vertex("1");
    P.quiver.add_vertex("2");
    P.quiver.add_arrow("a", 0, 1);
    P.degree = {0};
    P.potential_degree = 1;
    AlgebraPresentation t = truncated_jacobian(P);
    CHECK(t.quiver.arrows.size() == 1);
    CHECK(t.relations.empty());
  }
  SUBCASE("wrong potential degree is rejected") {
    GradedQP P = three_cycle(0, 1, 1);  // degree 2
    CHECK_THROWS_AS(truncated_jacobian(P), std::domain_error);
  }
}

TEST_CASE("algebraicity") {
  SUBCASE("hereditary quiver with zero potential") {
    GradedQP P;
    P.quiver.add_vertex("1");
    P.quiver.add_vertex("2");
    P.quiver.add_arrow("a", 0, 1);
    P.degree = {0};
    P.potential_degree = 1;
    CHECK(is_algebraic(P));
  }
  SUBCASE("3-cycle QP is algebraic") { CHECK(is_algebraic(three_cycle(0, 0, 1))); }
}

TEST_CASE("premutation") {
  SUBCASE("A3 at the middle vertex") {
    GradedQP P;
    Quiver& q = P.quiver;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 1, 2);
    P.degree = {0, 0};
    P.potential_degree = 1;
    GradedQP M = premutate(P, 1, MutationSide::Left);
    const Quiver& mq = M.quiver;
    int comp = mq.arrow_id("[b.a]");
    int as = mq.arrow_id("a*");
    int bs = mq.arrow_id("b*");
    REQUIRE(comp >= 0);
    REQUIRE(as >= 0);
    REQUIRE(bs >= 0);
    CHECK(mq.arrows[comp].src == 0);
    CHECK(mq.arrows[comp].dst == 2);
    CHECK(M.degree[comp] == 0);
    CHECK(mq.arrows[as].src == 1);
    CHECK(mq.arrows[as].dst == 0);
    CHECK(M.degree[as] == 1);  // -d(a) + d(W)
    CHECK(mq.arrows[bs].src == 2);
    CHECK(mq.arrows[bs].dst == 1);
    CHECK(M.degree[bs] == 0);  // -d(b)
    REQUIRE(M.potential.terms.size() == 1);
    CHECK(cycle_normalize(mq, M.potential.terms.begin()->first) ==
          cycle_normalize(mq, word(mq, {"[b.a]", "b*", "a*"})));
  }
  SUBCASE("right rule flips which side picks up d(W)") {
    GradedQP P;
    Quiver& q = P.quiver;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", 0, 1);  // vertex 2 is a sink
    P.degree = {0};
    P.potential_degree = 1;
    GradedQP L = premutate(P, 1, MutationSide::Left);
    GradedQP R = premutate(P, 1, MutationSide::Right);
    CHECK(L.degree[L.quiver.arrow_id("a*")] == 1);   // -d(a) + d(W)
    CHECK(R.degree[R.quiver.arrow_id("a*")] == 0);   // -d(a)
    CHECK(L.potential.is_zero());                    // sinks create no composites
  }
}

TEST_CASE("reduction") {
  SUBCASE("2-cycle plus chord: both arrows vanish") {
    GradedQP P;
    Quiver& q = P.quiver;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 1, 0);
    q.add_arrow("d", 1, 2);
    q.add_arrow("e", 2, 0);
    P.degree = {0, 1, 0, 1};
    P.potential_degree = 1;
    P.potential.add_term(word(q, {"a", "b"}), Rat(1));
    P.potential.add_term(word(q, {"a", "d", "e"}), Rat(1));
    P.potential = potential_normalize(q, P.potential);
    GradedQP R = reduce(P);
    CHECK(R.quiver.arrows.size() == 2);
    CHECK(R.quiver.arrow_id("a") < 0);
    CHECK(R.quiver.arrow_id("b") < 0);
    CHECK(R.quiver.arrow_id("d") >= 0);
    CHECK(R.quiver.arrow_id("e") >= 0);
    CHECK(R.potential.is_zero());
  }
  SUBCASE("nothing to do is the identity") {
    GradedQP P = three_cycle(0, 0, 1);
    GradedQP R = reduce(P);
    CHECK(R.quiver.arrows.size() == 3);
    CHECK(R.potential.terms == P.potential.terms);
  }
}

TEST_CASE("mutation") {
  SUBCASE("3-cycle mutates to the A3 path quiver") {
    GradedQP P = three_cycle(0, 0, 1);
    GradedQP M = mutate(P, 0, MutationSide::Left);
    CHECK(M.quiver.arrows.size() == 2);
    CHECK(M.potential.is_zero());
    CHECK_FALSE(M.quiver.has_two_cycle());
  }
  SUBCASE("homogeneity and the 2-cycle ban survive random mutations") {
    std::mt19937 rng(5);
    GradedQP P = three_cycle(0, 0, 1);
    GradedQP cur = P;
    for (int step = 0; step < 60; ++step) {
      int k = static_cast<int>(rng() % cur.quiver.vertices.size());
      MutationSide side = (rng() % 2) ? MutationSide::Left : MutationSide::Right;
      cur = mutate(cur, k, side);
      CHECK_NOTHROW(cur.validate());
    }
  }
  SUBCASE("left then right at the same vertex preserves graded dimensions") {
    GradedQP P = three_cycle(0, 0, 1);
    auto base = jac_dims(P);
    for (int k = 0; k < 3; ++k) {
      GradedQP back = mutate(mutate(P, k, MutationSide::Left), k, MutationSide::Right);
      CHECK(jac_dims(back) == base);
    }
  }
  SUBCASE("orbit of size one equals a single mutation") {
    GradedQP P = three_cycle(0, 0, 1);
    GradedQP a = mutate(P, 2, MutationSide::Left);
    GradedQP b = mutate_orbit(P, {2}, MutationSide::Left);
    CHECK(quiver_isomorphic(a.quiver, b.quiver));
    CHECK(jac_dims(a) == jac_dims(b));
  }
  SUBCASE("adjacent orbits are rejected") {
    GradedQP P = three_cycle(0, 0, 1);
    CHECK_THROWS_AS(mutate_orbit(P, {0, 1}, MutationSide::Left), std::domain_error);
  }
}
