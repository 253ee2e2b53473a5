#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "celldraw/cells.hpp"
#include "celldraw/constructions.hpp"
#include "celldraw/properties.hpp"

namespace celldraw {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw Error(Err::ValidationError, "doubled triangulation: " + msg);
}

}  // namespace

// Every face is handled in a local chart that realizes its walk orientation:
// face (g0,g1,g2) maps to (0,0),(0,1),(1,0), where rotations sorted by
// ccw_less match the global rotation system. Each added edge runs between the
// two corners opposite its base edge, as a cevian in each incident face.
Generated doubled_triangulation(const BaseTriangulation& base, bool multi) {
  const Drawing& bd = base.drawing;
  const int V = bd.vertex_count;
  const int E = static_cast<int>(bd.edges.size());
  const int F = static_cast<int>(base.faces.size());
  const int nc = multi ? 2 : 1;

  std::map<std::pair<int, int>, int> face_of;  // directed edge -> incident face
  for (int f = 0; f < F; ++f)
    for (int k = 0; k < 3; ++k)
      if (!face_of.emplace(std::make_pair(base.faces[f][k], base.faces[f][(k + 1) % 3]), f).second)
        bad("face list is not consistently oriented");

  std::map<std::pair<int, int>, int> edge_idx;
  for (int e = 0; e < E; ++e)
    edge_idx[{std::min(bd.edges[e].tail, bd.edges[e].head),
              std::max(bd.edges[e].tail, bd.edges[e].head)}] = e;

  auto third_of = [&](int f, int a, int b) {
    for (int c : base.faces[f])
      if (c != a && c != b) return c;
    bad("face without a third corner");
  };

  struct EInfo {
    int u = -1, v = -1, fL = -1, fR = -1, wL = -1, wR = -1;
    std::vector<Rat> tau;  // crossing params along the edge, from min(u,v)
  };
  std::vector<EInfo> einfo(E);
  for (int e = 0; e < E; ++e) {
    EInfo& ei = einfo[e];
    ei.u = bd.edges[e].tail;
    ei.v = bd.edges[e].head;
    ei.fL = face_of.at({ei.u, ei.v});
    ei.fR = face_of.at({ei.v, ei.u});
    ei.wL = third_of(ei.fL, ei.u, ei.v);
    ei.wR = third_of(ei.fR, ei.u, ei.v);
    if (ei.wL == ei.wR || ei.wL == ei.u || ei.wL == ei.v || ei.wR == ei.u || ei.wR == ei.v)
      throw Error(Err::PreconditionFailed, "opposite corners of an edge coincide");
    Rat eta = rat(1, 1009 + 17 * e);  // per-edge jitter keeps cevians generic
    if (multi)
      ei.tau = {rat(2, 5) + eta, rat(3, 5) + eta};
    else
      ei.tau = {rat(1, 2) + eta};
  }

  MapBuilder mb;
  for (int i = 0; i < V; ++i) mb.add_node(NodeKind::Vertex, bd.nodes[i].name);
  std::vector<std::array<int, 2>> xnode(E, {-1, -1});
  for (int e = 0; e < E; ++e)
    for (int c = 0; c < nc; ++c) xnode[e][c] = mb.add_node(NodeKind::Crossing);

  // chart positions per face, and per added edge the crossings inside each of
  // its two faces (param measured from the corner the cevian starts at)
  std::vector<std::map<int, Pt>> fpos(F);
  std::vector<int> node_face(mb.nodes.size(), -1);  // grows with internal crossings
  struct Hits {
    std::vector<std::pair<Rat, int>> in[2];  // [0] inside fL, [1] inside fR
  };
  std::vector<Hits> ahits(static_cast<size_t>(E) * nc);
  // cevians from a corner into a face: (side param from the ccw-previous
  // neighbor, added edge); sorted before insertion into the vertex rotation
  std::map<std::pair<int, int>, std::vector<std::pair<Rat, int>>> corner_cevs;

  for (int f = 0; f < F; ++f) {
    const auto& tri = base.faces[f];
    const Pt chart[3] = {Pt{rat(0), rat(0)}, Pt{rat(0), rat(1)}, Pt{rat(1), rat(0)}};
    for (int s = 0; s < 3; ++s) fpos[f][tri[s]] = chart[s];

    struct Cev {
      int aidx, s, e, copy;
      Pt from, to;
      std::vector<std::pair<Rat, int>> hits;
    };
    std::vector<Cev> cevs;
    for (int s = 0; s < 3; ++s) {
      int s1 = (s + 1) % 3, s2 = (s + 2) % 3;
      int e = edge_idx.at({std::min(tri[s1], tri[s2]), std::max(tri[s1], tri[s2])});
      for (int c = 0; c < nc; ++c) {
        Rat t = tri[s1] < tri[s2] ? einfo[e].tau[c] : 1 - einfo[e].tau[c];  // from tri[s1]
        Pt foot{chart[s1].x + t * (chart[s2].x - chart[s1].x),
                chart[s1].y + t * (chart[s2].y - chart[s1].y)};
        fpos[f][xnode[e][c]] = foot;
        cevs.push_back({e * nc + c, s, e, c, chart[s], foot, {}});
        corner_cevs[{f, tri[s]}].push_back({1 - t, e * nc + c});
      }
    }

    std::map<std::pair<Rat, Rat>, int> seen;
    for (size_t i = 0; i < cevs.size(); ++i)
      for (size_t j = i + 1; j < cevs.size(); ++j) {
        if (cevs[i].s == cevs[j].s) continue;
        Pt d1 = cevs[i].to - cevs[i].from, d2 = cevs[j].to - cevs[j].from;
        Rat den = cross(d1, d2);
        if (den == 0) bad("parallel cevians");
        Pt w = cevs[j].from - cevs[i].from;
        Rat l1 = cross(w, d2) / den, l2 = cross(w, d1) / den;
        if (!(l1 > 0 && l1 < 1 && l2 > 0 && l2 < 1)) bad("cevians do not cross inside the face");
        Pt p{cevs[i].from.x + l1 * d1.x, cevs[i].from.y + l1 * d1.y};
        if (!seen.emplace(std::make_pair(p.x, p.y), 1).second) bad("concurrent cevians");
        int nd = mb.add_node(NodeKind::Crossing);
        node_face.resize(mb.nodes.size(), -1);
        node_face[nd] = f;
        fpos[f][nd] = p;
        cevs[i].hits.push_back({l1, nd});
        cevs[j].hits.push_back({l2, nd});
      }

    for (auto& cv : cevs) {
      std::sort(cv.hits.begin(), cv.hits.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ahits[cv.aidx].in[f == einfo[cv.e].fL ? 0 : 1] = cv.hits;
    }
  }

  // base edge routes, then added edge routes (builder edge index = E + aidx)
  std::vector<std::vector<int>> routes(static_cast<size_t>(E) * (1 + nc));
  for (int e = 0; e < E; ++e) {
    std::vector<int>& r = routes[e];
    r.push_back(einfo[e].u);
    bool from_min = einfo[e].u == std::min(einfo[e].u, einfo[e].v);
    for (int c = 0; c < nc; ++c) r.push_back(xnode[e][from_min ? c : nc - 1 - c]);
    r.push_back(einfo[e].v);
    mb.add_edge(r, bd.edges[e].name);
  }
  for (int e = 0; e < E; ++e)
    for (int c = 0; c < nc; ++c) {
      int a = e * nc + c;
      std::vector<int>& r = routes[E + a];
      r.push_back(einfo[e].wL);
      for (auto& [l, nd] : ahits[a].in[0]) r.push_back(nd);
      r.push_back(xnode[e][c]);
      for (auto it = ahits[a].in[1].rbegin(); it != ahits[a].in[1].rend(); ++it)
        r.push_back(it->second);
      r.push_back(einfo[e].wR);
      std::string nm = bd.edges[e].name.empty() ? "e" + std::to_string(e) : bd.edges[e].name;
      mb.add_edge(r, "d" + std::to_string(c) + "_" + nm);
    }

  auto route_dart = [&](int me, int pos, bool ahead) {
    return ahead ? mb.fwd(me, pos) : mb.bwd(me, pos - 1);
  };
  // dart of added edge a at its endpoint u (corner of one of its faces)
  auto cev_end_dart = [&](int a, int u) {
    if (einfo[a / nc].wL == u) return mb.fwd(E + a, 0);
    return mb.bwd(E + a, static_cast<int>(routes[E + a].size()) - 2);
  };

  // base vertices: between consecutive base darts u->z, u->z' sits the face
  // holding directed (u,z'), whose third corner is z; its cevians from u go
  // there ordered by ascending side param measured from z
  for (int u = 0; u < V; ++u) {
    const auto& rot = bd.rotations[u];
    int deg = static_cast<int>(rot.size());
    std::vector<int> order;
    for (int i = 0; i < deg; ++i) {
      int e = bd.darts[rot[i]].edge;
      order.push_back(u == bd.edges[e].tail
                          ? mb.fwd(e, 0)
                          : mb.bwd(e, static_cast<int>(routes[e].size()) - 2));
      int z = bd.seg_to(rot[i]);
      int z2 = bd.seg_to(rot[(i + 1) % deg]);
      int g = face_of.at({u, z2});
      if (third_of(g, u, z2) != z) bad("vertex rotation disagrees with face list");
      auto it = corner_cevs.find({g, u});
      if (it == corner_cevs.end()) continue;
      std::sort(it->second.begin(), it->second.end());
      for (auto& [t, a] : it->second) order.push_back(cev_end_dart(a, u));
    }
    mb.set_rotation(u, order);
  }

  // crossings on a base edge: cyclic (into fR, toward u, into fL, toward v)
  for (int e = 0; e < E; ++e)
    for (int c = 0; c < nc; ++c) {
      int nd = xnode[e][c];
      int p = -1, q = -1;
      for (size_t k = 0; k < routes[e].size(); ++k)
        if (routes[e][k] == nd) p = static_cast<int>(k);
      int a = e * nc + c;
      for (size_t k = 0; k < routes[E + a].size(); ++k)
        if (routes[E + a][k] == nd) q = static_cast<int>(k);
      mb.set_rotation(nd, {route_dart(E + a, q, true), route_dart(e, p, false),
                           route_dart(E + a, q, false), route_dart(e, p, true)});
    }

  // interior crossings: exact ccw order of the four outgoing directions
  {
    std::map<int, std::vector<std::pair<Pt, int>>> rays;
    for (int a = 0; a < E * nc; ++a) {
      const auto& r = routes[E + a];
      for (size_t k = 1; k + 1 < r.size(); ++k) {
        int nd = r[k];
        if (node_face[nd] < 0) continue;
        const auto& pos = fpos[node_face[nd]];
        rays[nd].push_back({pos.at(r[k - 1]) - pos.at(nd), mb.bwd(E + a, static_cast<int>(k) - 1)});
        rays[nd].push_back({pos.at(r[k + 1]) - pos.at(nd), mb.fwd(E + a, static_cast<int>(k))});
      }
    }
    for (auto& [nd, lst] : rays) {
      if (lst.size() != 4) bad("interior crossing without four darts");
      std::sort(lst.begin(), lst.end(),
                [](const auto& a, const auto& b) { return ccw_less(a.first, b.first); });
      std::vector<int> order;
      for (auto& [dir, dart] : lst) order.push_back(dart);
      mb.set_rotation(nd, order);
    }
  }

  Drawing d = mb.build();

  if (static_cast<int>(d.edges.size()) != (1 + nc) * E) bad("unexpected edge count");
  long want = multi ? 9L * V - 18 : 6L * V - 12;
  if (static_cast<long>(d.edges.size()) != want) bad("edge count misses the density target");

  Census cs = census(d);
  std::map<std::string, int> expect;
  if (multi)
    expect = {{"XXX", 6 * F}, {"XXXXX", 3 * F}, {"XXXXXX", F}, {"VXX", 6 * F}, {"VXXX", 3 * F}};
  else
    expect = {{"XXX", F}, {"VXX", 3 * F}, {"VXXX", 3 * F}};
  if (cs.by_type != expect) {
    std::string got;
    for (auto& [w, k] : cs.by_type) got += " " + w + ":" + std::to_string(k);
    bad("cell census off:" + got);
  }
  if (multi) {
    if (auto w = non_homotopic_violation(d)) bad("not non-homotopic: " + *w);
  } else {
    if (auto w = simple_violation(d)) bad("not simple: " + *w);
  }
  return {std::move(d), std::nullopt};
}

}  // namespace celldraw
