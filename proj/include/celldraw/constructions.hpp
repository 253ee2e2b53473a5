#pragma once
#include <array>
#include <optional>
#include <vector>

#include "celldraw/geometry.hpp"
#include "celldraw/map.hpp"

namespace celldraw {

// crossing-free triangulated sphere drawing plus its ccw-oriented face list
struct BaseTriangulation {
  Drawing drawing;
  std::vector<std::array<int, 3>> faces;
};

// oriented face list -> validated triangulation (rotations chained per vertex)
BaseTriangulation triangulation_from_faces(int vertex_count,
                                           std::vector<std::array<int, 3>> faces);

// geodesic subdivision of the icosahedron; s=1 is the icosahedron itself.
// checks the doubling preconditions: for every edge uv with opposite face
// corners w,w', the pair ww' is not an edge and is distinct across edges.
BaseTriangulation geodesic_base(int s);

// generator output: the validated drawing, plus exact polyline geometry for
// the generators that are realized geometrically
struct Generated {
  Drawing drawing;
  std::optional<GeometricDrawing> geometry;
};

// adds one (multi=false) or two parallel (multi=true) edges between the
// opposite corners of each base edge's face pair, crossing only that edge
Generated doubled_triangulation(const BaseTriangulation& base, bool multi);

Generated wedge_complete(int n);
Generated convex_5_2_free(int n);
Generated crossing_gadget_rewrite(const Drawing& input);
Generated hexgrid_cylinder(int m);
Generated cylinder_quasiplanar(int n);
Generated cylinder_threezero_free(int n);
Generated fourone_free(int k);

}  // namespace celldraw
