#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpline/endalg.hpp"
#include "wpline/quiver_iso.hpp"

using namespace wpline;

namespace {

AlgebraPresentation canonical2222_fixture(const Rat& lambda) {
  AlgebraPresentation a;
  Quiver& q = a.quiver;
  q.add_vertex("0");
  for (int i = 1; i <= 4; ++i) q.add_vertex("x" + std::to_string(i));
  q.add_vertex("c");
  for (int i = 1; i <= 4; ++i) q.add_arrow("a" + std::to_string(i), 0, i);
  for (int i = 1; i <= 4; ++i) q.add_arrow("b" + std::to_string(i), i, 5);
  auto path2 = [&](int i) {
    Path p;
    p.src = 0;
    p.as = {q.arrow_id("a" + std::to_string(i)), q.arrow_id("b" + std::to_string(i))};
    return p;
  };
  PathPoly r3, r4;
  r3.add_term(path2(3), Rat(1));
  r3.add_term(path2(2), Rat(-1));
  r3.add_term(path2(1), Rat(1));
  r4.add_term(path2(4), Rat(1));
  r4.add_term(path2(2), Rat(-1));
  r4.add_term(path2(1), lambda);
  a.relations = {r3, r4};
  return a;
}

}  // namespace

TEST_CASE("single line bundle") {
  Weights w({2, 3, 6});
  SheafSum T;
  T.items = {line_bundle(lv_zero(w))};
  auto a = end_algebra(w, T);
  CHECK(a.quiver.vertices.size() == 1);
  CHECK(a.quiver.arrows.empty());
  CHECK(a.relations.empty());
}

TEST_CASE("canonical algebra of (2,2,2,2;2)") {
  Weights w = Weights::parse("2,2,2,2;lambda4=2");
  auto a = end_algebra(w, canonical_sum(w));
  CHECK(a.quiver.vertices.size() == 6);
  CHECK(a.quiver.arrows.size() == 8);
  CHECK(a.relations.size() == 2);
  auto out = fd_quotient(a, 32);
  auto* fd = std::get_if<FDAlgebraData>(&out);
  REQUIRE(fd != nullptr);
  CHECK(fd->total_dim == end_algebra_dim(w, canonical_sum(w)));
  CHECK(fd->total_dim == 16);
  CHECK(gldim(*fd) == 2);
  SUBCASE("matches the reference presentation up to isomorphism") {
    CHECK(presentation_equivalent(a, canonical2222_fixture(Rat(2))));
  }
}

TEST_CASE("canonical algebras across weight types") {
  for (const char* spec : {"2,3,6", "2,4,4", "3,3,3", "2,3,5", "2,2,4"}) {
    Weights w = Weights::parse(spec);
    CAPTURE(spec);
    auto T = canonical_sum(w);
    auto a = end_algebra(w, T);
    CHECK(static_cast<long>(a.quiver.vertices.size()) == tilting_rank(w));
    // one arm of p_i arrows per weight
    long arrows = 0;
    for (int i = 0; i < w.count(); ++i) arrows += w.p(i);
    CHECK(static_cast<long>(a.quiver.arrows.size()) == arrows);
    CHECK(static_cast<long>(a.relations.size()) == w.count() - 2);
    auto out = fd_quotient(a, 32);
    auto* fd = std::get_if<FDAlgebraData>(&out);
    REQUIRE(fd != nullptr);
    CHECK(fd->total_dim == end_algebra_dim(w, T));
    CHECK(gldim(*fd) == 2);
  }
}

TEST_CASE("minimal relation counts equal Ext^2 dimensions") {
  Weights w = Weights::parse("2,3,6");
  auto a = end_algebra(w, canonical_sum(w));
  auto out = fd_quotient(a, 32);
  auto* fd = std::get_if<FDAlgebraData>(&out);
  REQUIRE(fd != nullptr);
  int V = static_cast<int>(a.quiver.vertices.size());
  std::vector<std::vector<long>> relcount(V, std::vector<long>(V, 0));
  for (const auto& r : a.relations) {
    const Path& p = r.terms.begin()->first;
    ++relcount[p.src][path_dst(a.quiver, p)];
  }
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j) CHECK(relcount[i][j] == ext_dims(*fd, i, j, 2));
}

TEST_CASE("mixed sums with torsion summands") {
  // line bundles and both exceptional simples at the second point of (2,2,4)
  Weights w({2, 2, 4});
  LVec om = lv_omega(w);
  LVec x = lv_x(w, 0), y = lv_x(w, 1), z = lv_x(w, 2);
  SheafSum T;
  T.items = {line_bundle(lv_zero(w)),
             line_bundle(z),
             line_bundle(lv_add(w, z, lv_scale(w, 2, om))),
             line_bundle(lv_add(w, x, om)),
             line_bundle(lv_add(w, x, lv_scale(w, 3, om))),
             line_bundle(lv_add(w, y, lv_scale(w, 2, om))),
             exc_simple(w, 1, 1),
             exc_simple(w, 1, 2)};
  T.normalize();
  auto a = end_algebra(w, T);
  auto out = fd_quotient(a, 32);
  auto* fd = std::get_if<FDAlgebraData>(&out);
  REQUIRE(fd != nullptr);
  CHECK(fd->total_dim == end_algebra_dim(w, T));
  // relation minimality: counts match Ext^2 of the quotient
  int V = static_cast<int>(a.quiver.vertices.size());
  std::vector<std::vector<long>> relcount(V, std::vector<long>(V, 0));
  for (const auto& r : a.relations) {
    const Path& p = r.terms.begin()->first;
    ++relcount[p.src][path_dst(a.quiver, p)];
  }
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j) CHECK(relcount[i][j] == ext_dims(*fd, i, j, 2));
}

TEST_CASE("non-basic sums are rejected") {
  Weights w({2, 2, 4});
  SheafSum T;
  T.items = {line_bundle(lv_zero(w)), line_bundle(lv_zero(w))};
  CHECK_THROWS_AS(end_algebra(w, T), std::domain_error);
}

TEST_CASE("deterministic output") {
  Weights w = Weights::parse("2,4,4");
  auto a1 = end_algebra(w, canonical_sum(w));
  auto a2 = end_algebra(w, canonical_sum(w));
  CHECK(a1.quiver.vertices == a2.quiver.vertices);
  CHECK(a1.quiver.arrows.size() == a2.quiver.arrows.size());
  for (size_t k = 0; k < a1.quiver.arrows.size(); ++k) {
    CHECK(a1.quiver.arrows[k].name == a2.quiver.arrows[k].name);
    CHECK(a1.quiver.arrows[k].src == a2.quiver.arrows[k].src);
    CHECK(a1.quiver.arrows[k].dst == a2.quiver.arrows[k].dst);
  }
  REQUIRE(a1.relations.size() == a2.relations.size());
  for (size_t k = 0; k < a1.relations.size(); ++k)
    CHECK(a1.relations[k].terms == a2.relations[k].terms);
}
