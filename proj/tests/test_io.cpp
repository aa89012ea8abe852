#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpline/catalog.hpp"
#include "wpline/io.hpp"
#include "wpline/threeprep.hpp"

using namespace wpline;

TEST_CASE("algebra JSON round trip") {
  for (const char* name : {"canonical-2222", "canonical-236", "grid-244"}) {
    const auto& a = catalog_get(name).algebra;
    AlgebraPresentation back = algebra_from_json(algebra_to_json(a));
    CHECK(back.quiver.vertices == a.quiver.vertices);
    REQUIRE(back.quiver.arrows.size() == a.quiver.arrows.size());
    for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
      CHECK(back.quiver.arrows[i].name == a.quiver.arrows[i].name);
      CHECK(back.quiver.arrows[i].src == a.quiver.arrows[i].src);
      CHECK(back.quiver.arrows[i].dst == a.quiver.arrows[i].dst);
    }
    REQUIRE(back.relations.size() == a.relations.size());
    for (size_t i = 0; i < a.relations.size(); ++i)
      CHECK(back.relations[i].terms == a.relations[i].terms);
  }
}

TEST_CASE("QP JSON round trip") {
  ExtendedQP E = extended_qp(catalog_get("canonical-244").algebra);
  GradedQP back = qp_from_json(qp_to_json(E.qp));
  CHECK(back.quiver.vertices == E.qp.quiver.vertices);
  CHECK(back.degree == E.qp.degree);
  CHECK(back.potential.terms == E.qp.potential.terms);
  CHECK(back.potential_degree == E.qp.potential_degree);
}

TEST_CASE("reports carry metadata") {
  auto meta = report_metadata(32);
  CHECK(meta.contains("tool"));
  CHECK(meta.contains("monomial_order"));
  CHECK(meta["cap"] == 32);
}
