#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "celldraw/constructions.hpp"

namespace celldraw {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Err::ValidationError, msg); }

}  // namespace

BaseTriangulation triangulation_from_faces(int vertex_count,
                                           std::vector<std::array<int, 3>> faces) {
  // directed boundary edge -> opposite corner; each must appear exactly once
  std::map<std::pair<int, int>, int> third;
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      int a = f[k], b = f[(k + 1) % 3], c = f[(k + 2) % 3];
      if (a < 0 || a >= vertex_count || a == b) bad("face list references bad vertex");
      if (!third.emplace(std::make_pair(a, b), c).second)
        bad("face orientations are inconsistent: repeated directed edge");
    }
  }

  std::vector<std::pair<int, int>> edge_pairs;
  for (const auto& [de, c] : third) {
    (void)c;
    if (!third.count({de.second, de.first})) bad("face list does not close up a surface");
    if (de.first < de.second) edge_pairs.push_back(de);
  }

  MapBuilder mb;
  for (int v = 0; v < vertex_count; ++v) mb.add_node(NodeKind::Vertex, "v" + std::to_string(v));
  std::map<std::pair<int, int>, int> edge_of;
  for (const auto& [a, b] : edge_pairs)
    edge_of[{a, b}] = mb.add_edge({a, b}, "e" + std::to_string(a) + "_" + std::to_string(b));
  auto dart = [&](int a, int b) {
    auto it = edge_of.find({std::min(a, b), std::max(a, b)});
    return a < b ? mb.fwd(it->second, 0) : mb.bwd(it->second, 0);
  };

  // face (v,b,c) occupies the ccw sector from v->c to v->b, so the ccw
  // successor of neighbor c at v is b; this makes walks equal stored faces
  for (int v = 0; v < vertex_count; ++v) {
    std::map<int, int> nxt;
    for (const auto& [de, c] : third)
      if (de.first == v) nxt[c] = de.second;
    if (nxt.empty()) bad("isolated vertex in face list");
    std::vector<int> order;
    int start = nxt.begin()->first, cur = start;
    do {
      order.push_back(dart(v, cur));
      auto it = nxt.find(cur);
      if (it == nxt.end()) bad("vertex neighborhood does not close into a disk");
      cur = it->second;
    } while (cur != start && order.size() <= nxt.size());
    if (order.size() != nxt.size()) bad("vertex neighborhood is not a single cycle");
    mb.set_rotation(v, std::move(order));
  }

  BaseTriangulation out{mb.build(), std::move(faces)};
  if (out.drawing.crossing_count != 0) bad("triangulation has crossings");
  return out;
}

namespace {

const std::array<int, 3> kIcosaFaces[20] = {
    {0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},   {0, 5, 1},
    {1, 6, 2},  {2, 6, 7},  {2, 7, 3},  {3, 7, 8},   {3, 8, 4},
    {4, 8, 9},  {4, 9, 5},  {5, 9, 10}, {5, 10, 1},  {1, 10, 6},
    {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10}};

// the doubled construction needs: no edge between the two corners opposite an
// edge, and distinct corner pairs across edges
void check_doubling_preconditions(const BaseTriangulation& base) {
  std::map<std::pair<int, int>, int> third;
  std::set<std::pair<int, int>> edge_set;
  for (const auto& f : base.faces)
    for (int k = 0; k < 3; ++k) {
      third[{f[k], f[(k + 1) % 3]}] = f[(k + 2) % 3];
      edge_set.insert({std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3])});
    }
  std::set<std::pair<int, int>> corner_pairs;
  for (const auto& [u, v] : edge_set) {
    int w = third.at({u, v}), w2 = third.at({v, u});
    std::pair<int, int> p{std::min(w, w2), std::max(w, w2)};
    if (edge_set.count(p))
      throw Error(Err::PreconditionFailed, "opposite corners of an edge are adjacent");
    if (!corner_pairs.insert(p).second)
      throw Error(Err::PreconditionFailed, "two edges share the same opposite-corner pair");
  }
}

}  // namespace

BaseTriangulation geodesic_base(int s) {
  if (s < 1) throw Error(Err::ParameterOutOfRange, "subdivision depth must be >= 1");

  std::vector<std::array<int, 3>> faces;
  int next_id = 12;
  std::map<std::array<int, 3>, int> edge_pt;  // (min, max, steps from min) -> id
  auto edge_point = [&](int a, int b, int k) {  // k steps from a of s along ab
    if (k == 0) return a;
    if (k == s) return b;
    std::array<int, 3> key{std::min(a, b), std::max(a, b), a < b ? k : s - k};
    auto [it, fresh] = edge_pt.emplace(key, next_id);
    if (fresh) ++next_id;
    return it->second;
  };

  for (int f = 0; f < 20; ++f) {
    auto [a, b, c] = kIcosaFaces[f];
    // grid ids at barycentric (s-i-j, i, j)
    std::map<std::pair<int, int>, int> grid;
    for (int i = 0; i <= s; ++i)
      for (int j = 0; i + j <= s; ++j) {
        int id;
        if (i == 0 && j == 0) id = a;
        else if (i == s) id = b;
        else if (j == s) id = c;
        else if (j == 0) id = edge_point(a, b, i);
        else if (i == 0) id = edge_point(a, c, j);
        else if (i + j == s) id = edge_point(b, c, j);
        else { id = next_id++; }
        grid[{i, j}] = id;
      }
    for (int i = 0; i + 1 <= s; ++i)
      for (int j = 0; i + j + 1 <= s; ++j) {
        faces.push_back({grid[{i, j}], grid[{i + 1, j}], grid[{i, j + 1}]});
        if (i + j + 2 <= s)
          faces.push_back({grid[{i + 1, j}], grid[{i + 1, j + 1}], grid[{i, j + 1}]});
      }
  }

  BaseTriangulation base = triangulation_from_faces(next_id, std::move(faces));
  check_doubling_preconditions(base);
  return base;
}

}  // namespace celldraw
