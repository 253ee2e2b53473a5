#include "celldraw/properties.hpp"

#include <algorithm>

#include "celldraw/geometry.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace celldraw;

namespace {

// two parallel edges u-v plus a pendant leg keeping the image connected
Drawing parallel_pair() {
  MapBuilder mb;
  int u = mb.add_node(NodeKind::Vertex, "u");
  int v = mb.add_node(NodeKind::Vertex, "v");
  int w = mb.add_node(NodeKind::Vertex, "w");
  mb.add_edge({u, v}, "up");
  mb.add_edge({u, v}, "down");
  mb.add_edge({u, w}, "leg");
  mb.set_rotation(u, {mb.fwd(1, 0), mb.fwd(0, 0), mb.fwd(2, 0)});
  mb.set_rotation(v, {mb.bwd(0, 0), mb.bwd(1, 0)});
  mb.set_rotation(w, {mb.bwd(2, 0)});
  return mb.build();
}

GeometricDrawing tent_bar() {
  GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}},
                {"b", {rat(4), rat(0)}},
                {"c", {rat(0), rat(1)}},
                {"d", {rat(4), rat(1)}}};
  g.edges = {{"tent", 0, 1, {{rat(2), rat(2)}}}, {"bar", 2, 3, {}}};
  return g;
}

std::pair<int, int> sorted_inside(const LensReport& r) {
  return {std::min(r.inside[0], r.inside[1]), std::max(r.inside[0], r.inside[1])};
}

}  // namespace

TEST_CASE("simple drawings: no violations, no lens candidates") {
  for (const Drawing& d : {fixtures::k3(), fixtures::x_tree(),
                           planarize(fixtures::geo_complete(fixtures::parabola_points(5)))}) {
    CHECK(is_simple_drawing(d));
    CHECK(enumerate_lenses(d).empty());
    CHECK(is_non_homotopic(d));
  }
}

TEST_CASE("parallel pair bounds an empty lens") {
  Drawing d = parallel_pair();
  auto sv = simple_violation(d);
  REQUIRE(sv.has_value());
  CHECK(sv->find("up") != std::string::npos);
  auto lenses = enumerate_lenses(d);
  REQUIRE(lenses.size() == 1);
  CHECK(sorted_inside(lenses[0]) == std::pair<int, int>{0, 1});
  CHECK(lenses[0].empty());
  CHECK(!is_non_homotopic(d));
  CHECK(non_homotopic_violation(d)->find("empty lens") == 0);
}

TEST_CASE("double crossing bounds an empty crossing-crossing lens") {
  Drawing d = planarize(tent_bar());
  CHECK(!is_simple_drawing(d));
  auto lenses = enumerate_lenses(d);
  REQUIRE(lenses.size() == 1);
  CHECK(sorted_inside(lenses[0]) == std::pair<int, int>{0, 4});
  CHECK(!is_non_homotopic(d));
  CHECK(is_quasiplanar(d));
}

TEST_CASE("node inside the lens makes it non-empty; boundary contacts do not count") {
  GeometricDrawing g = tent_bar();
  g.vertices.push_back({"g", {rat(2), rat(3, 2)}});
  g.vertices.push_back({"h", {rat(2), rat(0)}});
  g.edges.push_back({"pend", 4, 5, {}});  // crosses the bar inside the lens
  Drawing d = planarize(g);
  auto lenses = enumerate_lenses(d);
  REQUIRE(lenses.size() == 1);
  // the pend-bar crossing lies on the lens boundary and is not counted
  CHECK(sorted_inside(lenses[0]) == std::pair<int, int>{1, 5});
  CHECK(!lenses[0].empty());
  CHECK(is_non_homotopic(d));
  CHECK(!is_simple_drawing(d));
}

TEST_CASE("adjacent edges crossing once bound a lens through vertex and crossing") {
  GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}}, {"b", {rat(4), rat(0)}}, {"c", {rat(4), rat(-1)}}};
  g.edges = {{"base", 0, 1, {}}, {"hook", 0, 2, {{rat(3), rat(1)}}}};
  Drawing d = planarize(g);
  auto lenses = enumerate_lenses(d);
  REQUIRE(lenses.size() == 1);
  CHECK(d.nodes[lenses[0].p].kind != d.nodes[lenses[0].q].kind);
  CHECK(lenses[0].empty());
  CHECK(!is_non_homotopic(d));
}

TEST_CASE("three pairwise crossing edges: quasiplanarity fails, XXX cell appears") {
  GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}}, {"b", {rat(6), rat(0)}},  {"c", {rat(1), rat(-1)}},
                {"d", {rat(4), rat(2)}}, {"e", {rat(5), rat(-1)}}, {"f", {rat(2), rat(2)}}};
  g.edges = {{"e0", 0, 1, {}}, {"e1", 2, 3, {}}, {"e2", 4, 5, {}}};
  Drawing d = planarize(g);
  auto qv = quasiplanar_violation(d);
  REQUIRE(qv.has_value());
  CHECK(qv->find("pairwise cross") != std::string::npos);
  CHECK(!is_celltype_free(d, parse_type("XXX")));
  CHECK(celltype_violation(d, parse_type("3_0"))->find("XXX") != std::string::npos);
  CHECK(is_celltype_free(d, parse_type("XXXX")));
}

TEST_CASE("quasiplanar implies XXX-free on connected drawings") {
  Drawing k5 = planarize(fixtures::geo_complete(fixtures::parabola_points(5)));
  CHECK(is_quasiplanar(k5));
  CHECK(is_celltype_free(k5, parse_type("XXX")));
}

TEST_CASE("edges_cross reads shared crossing nodes") {
  Drawing d = fixtures::x_tree();
  CHECK(edges_cross(d, 0, 1));
  CHECK(!edges_cross(fixtures::k3(), 0, 1));
}
