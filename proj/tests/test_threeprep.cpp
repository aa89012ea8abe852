#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpline/catalog.hpp"
#include "wpline/endalg.hpp"
#include "wpline/quiver_iso.hpp"
#include "wpline/threeprep.hpp"

using namespace wpline;

namespace {

AlgebraPresentation canonical_algebra(const std::string& spec) {
  Weights w = Weights::parse(spec);
  return end_algebra(w, canonical_sum(w));
}

AlgebraPresentation a2_quiver() {
  AlgebraPresentation a;
  a.quiver.add_vertex("1");
  a.quiver.add_vertex("2");
  a.quiver.add_arrow("a", 0, 1);
  return a;
}

}  // namespace

TEST_CASE("extended quiver") {
  SUBCASE("hereditary input: nothing added") {
    ExtendedQP E = extended_qp(a2_quiver());
    CHECK(E.qp.quiver.arrows.size() == 1);
    CHECK(E.qp.potential.is_zero());
    CHECK(E.relation_arrow.empty());
  }
  SUBCASE("commutative square gains one reverse diagonal of degree 1") {
    AlgebraPresentation A;
    Quiver& q = A.quiver;
    for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 1, 3);
    q.add_arrow("c", 0, 2);
    q.add_arrow("d", 2, 3);
    PathPoly r;
    Path p1, p2;
    p1.src = 0;
    p1.as = {q.arrow_id("a"), q.arrow_id("b")};
    p2.src = 0;
    p2.as = {q.arrow_id("c"), q.arrow_id("d")};
    r.add_term(p1, Rat(1));
    r.add_term(p2, Rat(-1));
    A.relations.push_back(r);
    ExtendedQP E = extended_qp(A);
    CHECK(E.qp.quiver.arrows.size() == 5);
    REQUIRE(E.relation_arrow.size() == 1);
    int id = E.relation_arrow[0];
    CHECK(E.qp.quiver.arrows[id].src == 3);
    CHECK(E.qp.quiver.arrows[id].dst == 0);
    CHECK(E.qp.degree[id] == 1);
  }
  SUBCASE("canonical (2,2,2,2;2): two degree-1 arrows from the sink back") {
    auto A = canonical_algebra("2,2,2,2;lambda4=2");
    ExtendedQP E = extended_qp(A);
    CHECK(E.qp.quiver.arrows.size() == 10);
    REQUIRE(E.relation_arrow.size() == 2);
    long deg1 = 0;
    for (int d : E.qp.degree)
      if (d == 1) ++deg1;
    CHECK(deg1 == 2);
    for (int id : E.relation_arrow) {
      CHECK(E.qp.quiver.arrows[id].src == A.quiver.vertex_id("O(1|0,0,0,0)"));
      // hold: names come from symbol_str; just check it points into the source vertex set
      CHECK(E.qp.degree[id] == 1);
    }
    CHECK(E.qp.potential_degree == 1);
    CHECK(E.qp.potential.terms.size() == 6);  // two relations with three terms each
  }
}

TEST_CASE("round trip: truncation recovers the presentation") {
  for (const char* spec : {"2,2,2,2;lambda4=2", "2,3,6", "2,4,4", "3,3,3", "2,3,5", "2,3,7"}) {
    CAPTURE(spec);
    auto A = canonical_algebra(spec);
    ExtendedQP E = extended_qp(A);
    AlgebraPresentation back = truncated_jacobian(E.qp);
    REQUIRE(back.quiver.arrows.size() == A.quiver.arrows.size());
    for (size_t i = 0; i < A.quiver.arrows.size(); ++i) {
      CHECK(back.quiver.arrows[i].name == A.quiver.arrows[i].name);
      CHECK(back.quiver.arrows[i].src == A.quiver.arrows[i].src);
      CHECK(back.quiver.arrows[i].dst == A.quiver.arrows[i].dst);
    }
    // identical relation ideals: same sets of normalized relations
    REQUIRE(back.relations.size() == A.relations.size());
    for (const auto& r : A.relations) {
      bool found = false;
      for (const auto& s : back.relations)
        if (r.terms == s.terms) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("pi3 of the base field") {
  AlgebraPresentation K;
  K.quiver.add_vertex("*");
  auto out = pi3(K);
  auto* g = std::get_if<GradedFD>(&out);
  REQUIRE(g != nullptr);
  CHECK(g->fd.total_dim == 1);
}

TEST_CASE("pi3 of the tubular canonical algebra is finite selfinjective") {
  auto A = canonical_algebra("2,2,2,2;lambda4=2");
  auto out = pi3(A);
  auto* g = std::get_if<GradedFD>(&out);
  REQUIRE(g != nullptr);
  CHECK(is_selfinjective(g->fd));
  // grading consistency: the degree-0 part is the algebra itself
  CHECK(g->dim_by_degree.at(0) == 16);
  SUBCASE("trivial Nakayama permutation") {
    auto pi = nakayama_permutation(g->fd);
    for (size_t i = 0; i < pi.size(); ++i) CHECK(pi[i] == static_cast<int>(i));
  }
}

TEST_CASE("2-representation-finiteness") {
  SUBCASE("tubular (2,2,2,2;2) is 2-RF") {
    auto r = is_2rf(canonical_algebra("2,2,2,2;lambda4=2"));
    CHECK(r.value == TriState::True);
    REQUIRE(r.nakayama.has_value());
  }
  SUBCASE("hereditary algebras fail by global dimension") {
    auto r = is_2rf(a2_quiver());
    CHECK(r.value == TriState::False);
    CHECK(r.reason.find("gldim") != std::string::npos);
  }
  SUBCASE("domestic type (2,3,5) is not 2-RF") {
    auto r = is_2rf(canonical_algebra("2,3,5"));
    CHECK(r.value == TriState::False);
  }
  SUBCASE("wild type (2,3,7) is not 2-RF") {
    auto r = is_2rf(canonical_algebra("2,3,7"));
    CHECK(r.value == TriState::False);
  }
}

TEST_CASE("2-homogeneity") {
  SUBCASE("tubular (2,2,2,2;2)") {
    CHECK(is_2homogeneous(canonical_algebra("2,2,2,2;lambda4=2")));
  }
  SUBCASE("precondition is enforced") {
    CHECK_THROWS_AS(is_2homogeneous(a2_quiver()), std::domain_error);
  }
}

TEST_CASE("2-APR reflections") {
  SUBCASE("hereditary algebras admit no 2-APR reflection") {
    // Ext^1(nu Q, P) = Ext^1(S_1, S_2) = K blocks the summand split
    CHECK_THROWS_AS(two_apr_tilt(a2_quiver(), 1, MutationSide::Left), std::domain_error);
  }
  SUBCASE("the reflected sink becomes a source") {
    auto A = canonical_algebra("2,2,2,2;lambda4=2");
    int sink = A.quiver.vertex_id("O(1|0,0,0,0)");
    auto t = two_apr_tilt(A, sink, MutationSide::Left);
    CHECK(t.algebra.quiver.vertices.size() == 6);
    CHECK(t.algebra.quiver.arrows.size() == 6);  // four arms survive, two reversed relations
    for (const auto& ar : t.algebra.quiver.arrows) CHECK(ar.dst != sink);
    int out_of_sink = 0;
    for (const auto& ar : t.algebra.quiver.arrows)
      if (ar.src == sink) ++out_of_sink;
    CHECK(out_of_sink == 2);
  }
  SUBCASE("reflection requires a sink / source") {
    auto A = canonical_algebra("2,2,2,2;lambda4=2");
    int source = A.quiver.vertex_id("O(0|0,0,0,0)");
    REQUIRE(source >= 0);
    CHECK_THROWS_AS(two_apr_tilt(A, source, MutationSide::Left), std::domain_error);
    CHECK_NOTHROW(two_apr_tilt(A, source, MutationSide::Right));
  }
  SUBCASE("reflection at the sink of the tubular canonical algebra") {
    auto A = canonical_algebra("2,2,2,2;lambda4=2");
    int sink = A.quiver.vertex_id("O(1|0,0,0,0)");
    REQUIRE(sink >= 0);
    auto t = two_apr_tilt(A, sink, MutationSide::Left);
    CHECK(t.input_2rf == TriState::True);
    CHECK(t.output_2rf == TriState::True);
    SUBCASE("left then right returns an equivalent presentation") {
      // the reflected algebra has a source where the sink was
      auto back = two_apr_tilt(t.algebra, sink, MutationSide::Right);
      CHECK(presentation_equivalent(back.algebra, A));
    }
  }
  SUBCASE("already 2-homogeneous input normalizes with an empty trace") {
    auto A = canonical_algebra("2,2,2,2;lambda4=2");
    auto trace = iterated_2apr_normalize(A, 8);
    CHECK(trace.reached_2homogeneous);
    CHECK(trace.steps.empty());
  }
  SUBCASE("a reflected sheaf algebra normalizes back to a 2-homogeneous one") {
    auto A = catalog_get("grid-244").algebra;
    int sink = A.quiver.vertex_id("S");
    REQUIRE(sink >= 0);
    auto t = two_apr_tilt(A, sink, MutationSide::Left);
    REQUIRE(t.output_2rf == TriState::True);
    CHECK_FALSE(is_2homogeneous(t.algebra));  // a complex-level reflection
    auto trace = iterated_2apr_normalize(t.algebra, 40);
    CHECK(trace.reached_2homogeneous);
    CHECK(trace.steps.size() == 1);
  }
}

TEST_CASE("grading consistency of the 3-preprojective algebras") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    auto fd = fd_quotient(entry.algebra, 32);
    auto* data = std::get_if<FDAlgebraData>(&fd);
    REQUIRE(data != nullptr);
    auto g = gldim(*data);
    if (!g || *g > 2) continue;
    auto out = pi3(entry.algebra);
    auto* gr = std::get_if<GradedFD>(&out);
    REQUIRE(gr != nullptr);
    CHECK(gr->dim_by_degree.at(0) == data->total_dim);
  }
}
