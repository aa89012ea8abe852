#include "wpline/catalog.hpp"

#include <stdexcept>

#include "wpline/sheaf.hpp"

namespace wpline {

AlgebraPresentation canonical_algebra(const Weights& w) {
  return end_algebra(w, canonical_sum(w));
}

AlgebraPresentation canonical_2222_reference(const Rat& lambda) {
  AlgebraPresentation a;
  Quiver& q = a.quiver;
  q.add_vertex("0");
  for (int i = 1; i <= 4; ++i) q.add_vertex("x" + std::to_string(i));
  q.add_vertex("c");
  for (int i = 1; i <= 4; ++i) q.add_arrow("a" + std::to_string(i), 0, i);
  for (int i = 1; i <= 4; ++i) q.add_arrow("b" + std::to_string(i), i, 5);
  auto arm = [&](int i) {
    Path p;
    p.src = 0;
    p.as = {q.arrow_id("a" + std::to_string(i)), q.arrow_id("b" + std::to_string(i))};
    return p;
  };
  PathPoly r3, r4;
  r3.add_term(arm(3), Rat(1));
  r3.add_term(arm(2), Rat(-1));
  r3.add_term(arm(1), Rat(1));
  r4.add_term(arm(4), Rat(1));
  r4.add_term(arm(2), Rat(-1));
  r4.add_term(arm(1), lambda);
  a.relations = {r3, r4};
  a.validate();
  return a;
}

AlgebraPresentation grid_244_algebra() {
  // Vertices follow the 3x3 layout of summands
  //   O        O(z)      S
  //   O(z+2w)  U         O(x+3w)
  //   S'       O(x+w)    O(y+2w)
  // over the reduced line of weight type (2,2,4); arrows point along
  // morphisms. The zero relations are forced by Hom vanishing between their
  // endpoints, the two commutativity squares by one-dimensional Hom targets.
  AlgebraPresentation a;
  Quiver& q = a.quiver;
  int vO = q.add_vertex("O");
  int vZ = q.add_vertex("O(z)");
  int vS = q.add_vertex("S");
  int vZ2 = q.add_vertex("O(z+2w)");
  int vU = q.add_vertex("U");
  int vX3 = q.add_vertex("O(x+3w)");
  int vS2 = q.add_vertex("S'");
  int vX1 = q.add_vertex("O(x+w)");
  int vY2 = q.add_vertex("O(y+2w)");

  int a1 = q.add_arrow("a1", vO, vZ);
  int a2 = q.add_arrow("a2", vZ, vS);
  int a3 = q.add_arrow("a3", vZ2, vU);
  int a4 = q.add_arrow("a4", vZ2, vO);
  int a5 = q.add_arrow("a5", vU, vX1);
  int a6 = q.add_arrow("a6", vU, vZ);
  int a7 = q.add_arrow("a7", vX3, vU);
  int a8 = q.add_arrow("a8", vX3, vY2);
  int a9 = q.add_arrow("a9", vX1, vS2);
  int a10 = q.add_arrow("a10", vY2, vX1);

  auto word = [&](std::initializer_list<int> arrows) {
    Path p;
    p.as.assign(arrows);
    p.src = q.arrows[p.as.front()].src;
    return p;
  };
  PathPoly r1;  // commutativity around the upper-left square
  r1.add_term(word({a4, a1}), Rat(1));
  r1.add_term(word({a3, a6}), Rat(-1));
  PathPoly r2;  // commutativity around the lower-right square
  r2.add_term(word({a7, a5}), Rat(1));
  r2.add_term(word({a8, a10}), Rat(-1));
  PathPoly r3;  // Hom(O(x+3w), S) = 0
  r3.add_term(word({a7, a6, a2}), Rat(1));
  PathPoly r4;  // Hom(O(z+2w), S') = 0
  r4.add_term(word({a3, a5, a9}), Rat(1));
  a.relations = {r1, r2, r3, r4};
  a.validate();
  return a;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto canonical = [&](const std::string& name, const std::string& spec,
                         const std::string& note) {
      Weights w = Weights::parse(spec);
      out.push_back({name, note, w, canonical_algebra(w)});
    };
    canonical("canonical-2222", "2,2,2,2;lambda4=2",
              "canonical algebra of tubular weight type (2,2,2,2), parameter 2");
    canonical("canonical-333", "3,3,3", "canonical algebra of tubular weight type (3,3,3)");
    canonical("canonical-244", "2,4,4", "canonical algebra of tubular weight type (2,4,4)");
    canonical("canonical-236", "2,3,6", "canonical algebra of tubular weight type (2,3,6)");
    canonical("canonical-235", "2,3,5", "canonical algebra of domestic weight type (2,3,5)");
    canonical("canonical-237", "2,3,7", "canonical algebra of wild weight type (2,3,7)");
    out.push_back({"canonical-2222-quiver",
                   "reference presentation of the canonical algebra of type (2,2,2,2;2)",
                   Weights::parse("2,2,2,2;lambda4=2"), canonical_2222_reference(Rat(2))});
    out.push_back({"grid-244",
                   "endomorphism algebra of a tau^2-stable tilting sheaf of weight type "
                   "(2,4,4) with two simple summands, reduced over (2,2,4)",
                   std::nullopt, grid_244_algebra()});
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::domain_error("unknown catalog entry: " + name);
}

}  // namespace wpline
