#include <doctest.h>

#include <algorithm>
#include <map>

#include "ccc/tait.hpp"
#include "fixtures.hpp"

using namespace ccc;

namespace {

// A bipartiteness witness must actually certify the answer.
void check_witness(const TaitGraph& g, const BipartiteResult& r) {
  if (r.bipartite) {
    std::map<int, int> part(r.part.begin(), r.part.end());
    for (const TaitEdge& e : g.edges) CHECK(part.at(e.u) != part.at(e.v));
  } else {
    REQUIRE(!r.odd_cycle.empty());
    CHECK(r.odd_cycle.size() % 2 == 1);
    std::map<int, const TaitEdge*> by_crossing;
    for (const TaitEdge& e : g.edges) by_crossing[e.crossing] = &e;
    // the crossings form a closed walk: consecutive edges share a face
    const size_t n = r.odd_cycle.size();
    if (n == 1) {
      const TaitEdge* e = by_crossing.at(r.odd_cycle[0]);
      CHECK(e->u == e->v);  // loop
    } else {
      for (size_t i = 0; i < n; ++i) {
        const TaitEdge* a = by_crossing.at(r.odd_cycle[i]);
        const TaitEdge* b = by_crossing.at(r.odd_cycle[(i + 1) % n]);
        const bool share = a->u == b->u || a->u == b->v || a->v == b->u || a->v == b->v;
        CHECK(share);
      }
    }
  }
}

}  // namespace

TEST_CASE("checkerboard: trefoil class sizes") {
  const auto [c0, c1] = checkerboard(parse_pd(fixtures::kTrefoilPD));
  CHECK(c0.count(FaceColor::shaded) == 2);
  CHECK(c0.count(FaceColor::white) == 3);
  CHECK(c1.count(FaceColor::shaded) == 3);
  CHECK(c1.count(FaceColor::white) == 2);
  // the two colorings are swaps of each other
  for (int f = 0; f < c0.n_faces; ++f) CHECK(c0.color[f] == opposite(c1.color[f]));
}

TEST_CASE("checkerboard: unknot and kink splits") {
  const auto [u0, u1] = checkerboard(parse_pd("UNKNOT"));
  CHECK(u0.count(FaceColor::shaded) == 1);
  CHECK(u1.count(FaceColor::shaded) == 1);
  const auto [k0, k1] = checkerboard(parse_pd(fixtures::kKinkPlusPD));
  const int a = k0.count(FaceColor::shaded);
  CHECK((a == 1 || a == 2));
  CHECK(k0.count(FaceColor::white) == 3 - a);
  CHECK(k1.count(FaceColor::shaded) == 3 - a);
}

TEST_CASE("checkerboard: adjacent faces have opposite colors") {
  for (const char* pd : {fixtures::kTrefoilPD, fixtures::kFig8PD, fixtures::k946PD}) {
    const auto [c0, c1] = checkerboard(parse_pd(pd));
    (void)c1;
    for (size_t arc = 0; arc < c0.arc_left_face.size(); ++arc)
      CHECK(c0.color[c0.arc_left_face[arc]] == opposite(c0.color[c0.arc_right_face[arc]]));
  }
}

TEST_CASE("tait_graph: trefoil gives 3 parallel edges and a triangle") {
  const LinkDiagram d = parse_pd(fixtures::kTrefoilPD);
  const auto [c0, c1] = checkerboard(d);
  (void)c1;
  const TaitGraph two_class = tait_graph(c0, FaceColor::shaded);  // 2 faces
  REQUIRE(two_class.vertices.size() == 2);
  REQUIRE(two_class.edges.size() == 3);
  for (const TaitEdge& e : two_class.edges) {
    CHECK(e.u != e.v);
    CHECK(e.u == two_class.edges[0].u);
    CHECK(e.v == two_class.edges[0].v);
  }
  CHECK(is_bipartite(two_class).bipartite);

  const TaitGraph triangle = tait_graph(c0, FaceColor::white);  // 3 faces
  REQUIRE(triangle.vertices.size() == 3);
  REQUIRE(triangle.edges.size() == 3);
  const BipartiteResult r = is_bipartite(triangle);
  CHECK_FALSE(r.bipartite);
  CHECK(r.odd_cycle.size() == 3);
  check_witness(triangle, r);
}

TEST_CASE("tait_graph: unknot is a single vertex with no edges") {
  const auto [c0, c1] = checkerboard(parse_pd("UNKNOT"));
  (void)c1;
  const TaitGraph g = tait_graph(c0, FaceColor::shaded);
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(is_bipartite(g).bipartite);
}

TEST_CASE("is_bipartite: a loop edge is an odd cycle") {
  const auto [c0, c1] = checkerboard(parse_pd(fixtures::kKinkPlusPD));
  bool saw_loop = false;
  for (const FaceColoring* c : {&c0, &c1}) {
    for (FaceColor col : {FaceColor::shaded, FaceColor::white}) {
      const TaitGraph g = tait_graph(*c, col);
      const BipartiteResult r = is_bipartite(g);
      check_witness(g, r);
      if (!r.bipartite && r.odd_cycle.size() == 1) saw_loop = true;
    }
  }
  CHECK(saw_loop);
}

TEST_CASE("tait graphs: vertex and edge counts") {
  for (const char* pd : {fixtures::kTrefoilPD, fixtures::kFig8PD, fixtures::k946PD,
                         fixtures::kP333PD, fixtures::kHopfPD, fixtures::kTorus24PD}) {
    const LinkDiagram d = parse_pd(pd);
    const auto [c0, c1] = checkerboard(d);
    (void)c1;
    const TaitGraph a = tait_graph(c0, FaceColor::shaded);
    const TaitGraph b = tait_graph(c0, FaceColor::white);
    CHECK(static_cast<int>(a.vertices.size() + b.vertices.size()) == d.num_crossings() + 2);
    CHECK(static_cast<int>(a.edges.size()) == d.num_crossings());
    CHECK(static_cast<int>(b.edges.size()) == d.num_crossings());
  }
}

TEST_CASE("eta is constant within each coloring of an alternating diagram") {
  for (const char* pd : {fixtures::kTrefoilPD, fixtures::kTrefoilMirrorPD, fixtures::kFig8PD,
                         fixtures::kP333PD, fixtures::kP533PD}) {
    const LinkDiagram d = parse_pd(pd);
    const auto [c0, c1] = checkerboard(d);
    for (const FaceColoring* c : {&c0, &c1}) {
      for (int x = 1; x < d.num_crossings(); ++x) CHECK(c->eta(x) == c->eta(0));
    }
  }
}

TEST_CASE("special_structure: fixtures") {
  const SpecialStructure tre = special_structure(parse_pd(fixtures::kTrefoilPD));
  CHECK(tre.found);
  CHECK(tre.compatible);
  CHECK(tre.coloring_index == 0);
  CHECK(tre.orientable[0]);
  CHECK_FALSE(tre.orientable[1]);

  const SpecialStructure f8 = special_structure(parse_pd(fixtures::kFig8PD));
  CHECK_FALSE(f8.found);
  CHECK_FALSE(f8.orientable[0]);
  CHECK_FALSE(f8.orientable[1]);

  const SpecialStructure unk = special_structure(parse_pd("UNKNOT"));
  CHECK(unk.found);
  CHECK(unk.compatible);

  // orientable surface exists but its boundary orientations mismatch
  const SpecialStructure inc = special_structure(parse_gauss(fixtures::kIncompatibleGauss));
  CHECK(inc.found);
  CHECK_FALSE(inc.compatible);
}

TEST_CASE("is_special_alternating") {
  CHECK(is_special_alternating(parse_pd(fixtures::kTrefoilPD)));
  CHECK(is_special_alternating(parse_pd("UNKNOT")));
  CHECK(is_special_alternating(fixtures::torus2(5)));
  CHECK_FALSE(is_special_alternating(parse_pd(fixtures::kFig8PD)));
  CHECK_FALSE(is_special_alternating(parse_pd(fixtures::k946PD)));  // special, not alternating
  CHECK(is_special_alternating(parse_pd(fixtures::kP333PD)));
}

TEST_CASE("(2,n) torus diagrams: at most one non-bipartite Tait graph") {
  for (int n = 2; n <= 11; ++n) {
    const LinkDiagram d = fixtures::torus2(n);
    const auto [c0, c1] = checkerboard(d);
    (void)c1;
    const bool a = is_bipartite(tait_graph(c0, FaceColor::shaded)).bipartite;
    const bool b = is_bipartite(tait_graph(c0, FaceColor::white)).bipartite;
    CHECK((a || b));
  }
}

TEST_CASE("special_structure is invariant under global orientation reversal") {
  for (const char* pd : {fixtures::kTrefoilPD, fixtures::kFig8PD, fixtures::kHopfPD,
                         fixtures::k946PD, fixtures::kTorus24PD}) {
    const LinkDiagram d = parse_pd(pd);
    const SpecialStructure a = special_structure(d);
    const SpecialStructure b = special_structure(reversed(d));
    CHECK(a.found == b.found);
    CHECK(a.compatible == b.compatible);
    // coloring indices may swap under relabeling; the orientable multiset may not
    CHECK(std::minmax(a.orientable[0], a.orientable[1]) ==
          std::minmax(b.orientable[0], b.orientable[1]));
  }
}
