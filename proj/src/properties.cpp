#include "celldraw/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace celldraw {

namespace {

// node -> position along the edge's node sequence (tail=0 .. head=last)
std::map<int, int> node_positions(const Drawing& d, int e) {
  std::map<int, int> pos;
  auto seq = d.edge_nodes(e);
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) pos[seq[i]] = i;
  return pos;
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string node_label(const Drawing& d, int v) {
  return d.nodes[v].name.empty() ? "#" + std::to_string(v) : d.nodes[v].name;
}

}  // namespace

bool edges_cross(const Drawing& d, int e, int f) {
  auto pos = node_positions(d, e);
  for (int x : d.edges[f].chain) {
    int n = d.seg_from(x);
    if (d.nodes[n].kind == NodeKind::Crossing && pos.count(n)) return true;
  }
  return false;
}

std::vector<LensReport> enumerate_lenses(const Drawing& d) {
  if (!is_connected_drawing(d))
    throw Error(Err::DisconnectedDrawing, "lens enumeration requires a connected drawing image");
  auto faces = trace_faces(d);
  std::vector<int> face_of(d.darts.size(), -1);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int dart : faces[f]) face_of[dart] = f;

  const int ne = static_cast<int>(d.edges.size());
  std::vector<std::map<int, int>> pos(ne);
  for (int e = 0; e < ne; ++e) pos[e] = node_positions(d, e);

  std::vector<LensReport> out;
  for (int e1 = 0; e1 < ne; ++e1) {
    for (int e2 = e1 + 1; e2 < ne; ++e2) {
      std::vector<int> common;
      for (auto [n, unused] : pos[e1])
        if (pos[e2].count(n)) common.push_back(n);
      if (common.size() < 2) continue;
      for (size_t i = 0; i < common.size(); ++i) {
        for (size_t j = i + 1; j < common.size(); ++j) {
          int p = common[i], q = common[j];
          auto strictly_between = [&](int c, int e) {
            int a = pos[e].at(p), b = pos[e].at(q), m = pos[e].at(c);
            return std::min(a, b) < m && m < std::max(a, b);
          };
          bool simple_curve = true;
          for (int c : common)
            if (c != p && c != q && strictly_between(c, e1) && strictly_between(c, e2))
              simple_curve = false;
          if (!simple_curve) continue;

          // block both darts of every segment on either arc
          std::vector<char> blocked(d.darts.size(), 0);
          std::vector<char> on_curve(d.nodes.size(), 0);
          for (int e : {e1, e2}) {
            int a = pos[e].at(p), b = pos[e].at(q);
            if (a > b) std::swap(a, b);
            auto seq = d.edge_nodes(e);
            for (int k = a; k <= b; ++k) on_curve[seq[k]] = 1;
            for (int k = a; k < b; ++k) {
              int dart = d.edges[e].chain[k];
              blocked[dart] = blocked[d.darts[dart].twin] = 1;
            }
          }
          DSU dsu(static_cast<int>(faces.size()));
          for (int dart = 0; dart < static_cast<int>(d.darts.size()); ++dart)
            if (!blocked[dart]) dsu.unite(face_of[dart], face_of[d.darts[dart].twin]);
          std::vector<int> roots;
          for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            if (dsu.find(f) == f) roots.push_back(f);
          if (roots.size() != 2)
            throw Error(Err::ValidationError, "lens curve does not split the sphere in two");

          LensReport rep;
          rep.e1 = e1;
          rep.e2 = e2;
          rep.p = p;
          rep.q = q;
          rep.node_side.assign(d.nodes.size(), -1);
          for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v) {
            if (on_curve[v]) continue;
            int side = dsu.find(face_of[d.rotations[v][0]]) == roots[0] ? 0 : 1;
            rep.node_side[v] = static_cast<signed char>(side);
            rep.inside[side]++;
          }
          out.push_back(std::move(rep));
        }
      }
    }
  }
  return out;
}

std::optional<std::string> simple_violation(const Drawing& d) {
  const int ne = static_cast<int>(d.edges.size());
  std::vector<std::map<int, int>> pos(ne);
  for (int e = 0; e < ne; ++e) pos[e] = node_positions(d, e);
  for (int e1 = 0; e1 < ne; ++e1) {
    for (int e2 = e1 + 1; e2 < ne; ++e2) {
      std::vector<int> common;
      for (auto [n, unused] : pos[e1])
        if (pos[e2].count(n)) common.push_back(n);
      if (common.size() >= 2) {
        std::string pts;
        for (int n : common) pts += (pts.empty() ? "" : ", ") + node_label(d, n);
        return "edges " + d.edges[e1].name + " and " + d.edges[e2].name + " share " +
               std::to_string(common.size()) + " points: " + pts;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> non_homotopic_violation(const Drawing& d) {
  for (const LensReport& rep : enumerate_lenses(d)) {
    if (!rep.empty()) continue;
    return "empty lens between edges " + d.edges[rep.e1].name + " and " + d.edges[rep.e2].name +
           " through " + node_label(d, rep.p) + " and " + node_label(d, rep.q);
  }
  return std::nullopt;
}

std::optional<std::string> quasiplanar_violation(const Drawing& d) {
  const int ne = static_cast<int>(d.edges.size());
  std::vector<std::vector<char>> x(ne, std::vector<char>(ne, 0));
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = e1 + 1; e2 < ne; ++e2)
      if (edges_cross(d, e1, e2)) x[e1][e2] = x[e2][e1] = 1;
  for (int a = 0; a < ne; ++a)
    for (int b = a + 1; b < ne; ++b) {
      if (!x[a][b]) continue;
      for (int c = b + 1; c < ne; ++c)
        if (x[a][c] && x[b][c])
          return "edges " + d.edges[a].name + ", " + d.edges[b].name + ", " + d.edges[c].name +
                 " pairwise cross";
    }
  return std::nullopt;
}

std::optional<std::string> celltype_violation(const Drawing& d, const CellType& t) {
  Census c = census(d);
  for (const Cell& cell : c.cells) {
    if (cell.word != t.word) continue;
    std::string corners;
    for (int dart : cell.walk)
      corners += (corners.empty() ? "" : ", ") + node_label(d, d.darts[dart].node);
    return "cell of type " + t.word + " with corners " + corners;
  }
  return std::nullopt;
}

}  // namespace celldraw
