#pragma once
#include "celldraw/geometry.hpp"
#include "celldraw/map.hpp"

namespace fixtures {

// plane triangle: 3 vertices, 3 uncrossed edges, 2 faces
inline celldraw::Drawing k3() {
  celldraw::MapBuilder mb;
  for (int i = 0; i < 3; ++i) mb.add_node(celldraw::NodeKind::Vertex, "v" + std::to_string(i));
  mb.add_edge({0, 1});
  mb.add_edge({1, 2});
  mb.add_edge({2, 0});
  mb.set_rotation(0, {mb.fwd(0, 0), mb.bwd(2, 0)});
  mb.set_rotation(1, {mb.fwd(1, 0), mb.bwd(0, 0)});
  mb.set_rotation(2, {mb.fwd(2, 0), mb.bwd(1, 0)});
  return mb.build();
}

// two independent edges crossing once; planarization is a tree
inline celldraw::Drawing x_tree() {
  celldraw::MapBuilder mb;
  for (int i = 0; i < 4; ++i) mb.add_node(celldraw::NodeKind::Vertex, "v" + std::to_string(i));
  int x = mb.add_node(celldraw::NodeKind::Crossing, "x");
  mb.add_edge({0, x, 1});
  mb.add_edge({2, x, 3});
  mb.set_rotation(0, {mb.fwd(0, 0)});
  mb.set_rotation(1, {mb.bwd(0, 1)});
  mb.set_rotation(2, {mb.fwd(1, 0)});
  mb.set_rotation(3, {mb.bwd(1, 1)});
  mb.set_rotation(x, {mb.bwd(0, 0), mb.bwd(1, 0), mb.fwd(0, 1), mb.fwd(1, 1)});
  return mb.build();
}

inline celldraw::Drawing two_disjoint_edges() {
  celldraw::MapBuilder mb;
  for (int i = 0; i < 4; ++i) mb.add_node(celldraw::NodeKind::Vertex, "v" + std::to_string(i));
  mb.add_edge({0, 1});
  mb.add_edge({2, 3});
  mb.set_rotation(0, {mb.fwd(0, 0)});
  mb.set_rotation(1, {mb.bwd(0, 0)});
  mb.set_rotation(2, {mb.fwd(1, 0)});
  mb.set_rotation(3, {mb.bwd(1, 0)});
  return mb.build();
}

inline celldraw::GeometricDrawing geo_k3() {
  using celldraw::rat;
  celldraw::GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}}, {"b", {rat(4), rat(0)}}, {"c", {rat(0), rat(4)}}};
  g.edges = {{"ab", 0, 1, {}}, {"bc", 1, 2, {}}, {"ca", 2, 0, {}}};
  return g;
}

// straight-line complete graph on given exact points
inline celldraw::GeometricDrawing geo_complete(const std::vector<celldraw::Pt>& pts) {
  celldraw::GeometricDrawing g;
  for (size_t i = 0; i < pts.size(); ++i) g.vertices.push_back({"v" + std::to_string(i), pts[i]});
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      g.edges.push_back({std::to_string(i) + "-" + std::to_string(j), static_cast<int>(i),
                         static_cast<int>(j), {}});
  return g;
}

// convex position with exact rational coordinates (parabola arc)
inline std::vector<celldraw::Pt> parabola_points(int n) {
  std::vector<celldraw::Pt> pts;
  for (int i = 0; i < n; ++i) pts.push_back({celldraw::rat(i), celldraw::rat(i * i)});
  return pts;
}

}  // namespace fixtures
