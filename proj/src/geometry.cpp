#include "celldraw/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace celldraw {

std::vector<Pt> GeometricDrawing::polyline(int e) const {
  std::vector<Pt> pts;
  pts.push_back(vertices[edges[e].tail].pos);
  for (const Pt& b : edges[e].bends) pts.push_back(b);
  pts.push_back(vertices[edges[e].head].pos);
  return pts;
}

bool ccw_less(const Pt& a, const Pt& b) {
  auto half = [](const Pt& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

namespace {

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
  if (cross(b - a, p - a) != 0) return false;
  return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

struct Contact {
  bool overlap = false;
  bool hit = false;
  Pt p;
  Rat s, u;  // parameters on the two segments when hit
};

Contact seg_contact(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  Contact r;
  Pt d1 = b - a, d2 = d - c;
  Rat denom = cross(d1, d2);
  if (denom != 0) {
    Rat s = cross(c - a, d2) / denom;
    Rat u = cross(c - a, d1) / denom;
    if (s >= 0 && s <= 1 && u >= 0 && u <= 1) {
      r.hit = true;
      r.s = s;
      r.u = u;
      r.p = a + s * d1;
    }
    return r;
  }
  if (cross(c - a, d1) != 0) return r;  // parallel, distinct lines
  // collinear: compare along the dominant axis
  Rat t0 = 0, t1 = dot(d1, d1);
  Rat tc = dot(c - a, d1), td = dot(d - a, d1);
  Rat lo = std::min(tc, td), hi = std::max(tc, td);
  Rat olo = std::max(t0, lo), ohi = std::min(t1, hi);
  if (olo < ohi) {
    r.overlap = true;
    return r;
  }
  if (olo == ohi) {
    r.hit = true;
    r.s = olo / t1;
    r.p = a + r.s * d1;
    r.u = dot(r.p - c, d2) / dot(d2, d2);
  }
  return r;
}

// outgoing direction rays of edge polyline pts at point p lying on it
std::vector<Pt> rays_at(const std::vector<Pt>& pts, const Pt& p) {
  std::vector<Pt> rays;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!on_segment(p, pts[i], pts[i + 1])) continue;
    if (!(p == pts[i])) rays.push_back(pts[i] - p);
    if (!(p == pts[i + 1])) rays.push_back(pts[i + 1] - p);
  }
  // collapse duplicates coming from a bend shared by two segments
  std::sort(rays.begin(), rays.end(), [](const Pt& a, const Pt& b) { return a < b; });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

EdgePos position_on(const std::vector<Pt>& pts, const Pt& p) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!on_segment(p, pts[i], pts[i + 1])) continue;
    if (p == pts[i + 1]) continue;  // normalized as (i+1, 0)
    Pt d = pts[i + 1] - pts[i];
    Rat t = dot(p - pts[i], d) / dot(d, d);
    return {static_cast<int>(i), t};
  }
  throw Error(Err::ValidationError, "point not on polyline");
}

}  // namespace

void validate_geometry(const GeometricDrawing& g) {
  std::map<Pt, int> vpos;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    auto [it, fresh] = vpos.emplace(g.vertices[v].pos, v);
    if (!fresh)
      throw Error(Err::ValidationError, "vertices " + g.vertices[it->second].name + " and " +
                                            g.vertices[v].name + " coincide");
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const GeoEdge& ge = g.edges[e];
    if (ge.tail < 0 || ge.head < 0 || ge.tail >= static_cast<int>(g.vertices.size()) ||
        ge.head >= static_cast<int>(g.vertices.size()))
      throw Error(Err::ValidationError, "edge " + ge.name + " has missing endpoint");
    if (ge.tail == ge.head) throw Error(Err::LoopEdge, "edge " + ge.name);
    auto pts = g.polyline(e);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i] == pts[i + 1])
        throw Error(Err::ValidationError, "edge " + ge.name + " repeats a polyline point");
    // polylines are simple curves
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      for (size_t j = i + 1; j + 1 < pts.size(); ++j) {
        Contact c = seg_contact(pts[i], pts[i + 1], pts[j], pts[j + 1]);
        if (j == i + 1) {
          if (c.overlap || (c.hit && !(c.p == pts[j])))
            throw Error(Err::SelfCrossing, "edge " + ge.name + " touches itself at a bend");
        } else if (c.overlap || c.hit) {
          throw Error(Err::SelfCrossing, "edge " + ge.name + " intersects itself");
        }
      }
    }
  }
  // no edge passes through a vertex point (interior or bend)
  for (const GeoVertex& v : g.vertices) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      auto pts = g.polyline(e);
      if (v.pos == pts.front() || v.pos == pts.back()) continue;
      for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (on_segment(v.pos, pts[i], pts[i + 1]))
          throw Error(Err::CrossingAtVertex,
                      "edge " + g.edges[e].name + " passes through vertex " + v.name);
    }
  }
}

std::vector<CrossingRecord> intersect_all(const GeometricDrawing& g) {
  validate_geometry(g);
  std::vector<CrossingRecord> out;
  const int ne = static_cast<int>(g.edges.size());
  std::vector<std::vector<Pt>> poly(ne);
  for (int e = 0; e < ne; ++e) poly[e] = g.polyline(e);

  for (int e1 = 0; e1 < ne; ++e1) {
    for (int e2 = e1 + 1; e2 < ne; ++e2) {
      std::vector<Pt> contact_pts;
      for (size_t i = 0; i + 1 < poly[e1].size(); ++i) {
        for (size_t j = 0; j + 1 < poly[e2].size(); ++j) {
          Contact c = seg_contact(poly[e1][i], poly[e1][i + 1], poly[e2][j], poly[e2][j + 1]);
          if (c.overlap)
            throw Error(Err::OverlappingSegments,
                        "edges " + g.edges[e1].name + " and " + g.edges[e2].name);
          if (c.hit) contact_pts.push_back(c.p);
        }
      }
      std::sort(contact_pts.begin(), contact_pts.end());
      contact_pts.erase(std::unique(contact_pts.begin(), contact_pts.end()), contact_pts.end());
      for (const Pt& p : contact_pts) {
        bool term1 = p == poly[e1].front() || p == poly[e1].back();
        bool term2 = p == poly[e2].front() || p == poly[e2].back();
        auto r1 = rays_at(poly[e1], p);
        auto r2 = rays_at(poly[e2], p);
        for (const Pt& ra : r1)
          for (const Pt& rb : r2)
            if (cross(ra, rb) == 0 && dot(ra, rb) > 0)
              throw Error(Err::OverlappingSegments, "edges " + g.edges[e1].name + " and " +
                                                        g.edges[e2].name + " run together");
        if (term1 && term2) continue;  // shared endpoint vertex
        if (term1 || term2)
          throw Error(Err::CrossingAtVertex, "edges " + g.edges[e1].name + " and " +
                                                 g.edges[e2].name + " meet at a vertex");
        // proper crossing iff the four rays alternate between the two edges
        std::vector<std::pair<Pt, int>> rays;
        for (const Pt& r : r1) rays.push_back({r, 1});
        for (const Pt& r : r2) rays.push_back({r, 2});
        std::sort(rays.begin(), rays.end(),
                  [](const auto& a, const auto& b) { return ccw_less(a.first, b.first); });
        bool alternate = rays.size() == 4;
        for (size_t k = 0; alternate && k < 4; ++k)
          if (rays[k].second == rays[(k + 1) % 4].second) alternate = false;
        if (!alternate)
          throw Error(Err::TangentialContact,
                      "edges " + g.edges[e1].name + " and " + g.edges[e2].name +
                          " touch without crossing");
        out.push_back({e1, e2, p, position_on(poly[e1], p), position_on(poly[e2], p)});
      }
    }
  }

  std::map<Pt, std::set<int>> edges_at;
  for (const auto& r : out) {
    auto& s = edges_at[r.p];
    s.insert(r.e1);
    s.insert(r.e2);
    if (s.size() >= 3)
      throw Error(Err::ConcurrentCrossing, "three edge interiors share a point");
  }
  std::sort(out.begin(), out.end(), [](const CrossingRecord& a, const CrossingRecord& b) {
    if (a.e1 != b.e1) return a.e1 < b.e1;
    if (a.e2 != b.e2) return a.e2 < b.e2;
    return a.pos1 < b.pos1;
  });
  return out;
}

const std::vector<Pt>& Planarized::piece(int dart) const {
  return seg_points[dart / 2];
}

Planarized planarize_with_geometry(const GeometricDrawing& g) {
  auto records = intersect_all(g);
  Planarized out;
  MapBuilder mb;
  const int nv = static_cast<int>(g.vertices.size());
  for (const GeoVertex& v : g.vertices) {
    mb.add_node(NodeKind::Vertex, v.name);
    out.node_pos.push_back(v.pos);
  }
  // crossing nodes in deterministic (edge pair, position) order
  for (size_t i = 0; i < records.size(); ++i) {
    mb.add_node(NodeKind::Crossing, "x" + std::to_string(i));
    out.node_pos.push_back(records[i].p);
  }
  // split each edge at its crossing positions
  struct Split {
    EdgePos pos;
    int node;
  };
  std::vector<std::vector<Split>> splits(g.edges.size());
  for (size_t i = 0; i < records.size(); ++i) {
    splits[records[i].e1].push_back({records[i].pos1, nv + static_cast<int>(i)});
    splits[records[i].e2].push_back({records[i].pos2, nv + static_cast<int>(i)});
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto& sp = splits[e];
    std::sort(sp.begin(), sp.end(), [](const Split& a, const Split& b) { return a.pos < b.pos; });
    auto pts = g.polyline(e);
    std::vector<int> route{g.edges[e].tail};
    for (const Split& s : sp) route.push_back(s.node);
    route.push_back(g.edges[e].head);
    int ei = mb.add_edge(route, g.edges[e].name);
    // geometry piece per chain segment
    auto point_at = [&](const EdgePos& p) {
      return pts[p.seg] + p.t * (pts[p.seg + 1] - pts[p.seg]);
    };
    EdgePos prev{0, Rat(0)};
    for (size_t k = 0; k <= sp.size(); ++k) {
      EdgePos next = k < sp.size()
                         ? sp[k].pos
                         : EdgePos{static_cast<int>(pts.size()) - 2, Rat(1)};
      std::vector<Pt> piece{point_at(prev)};
      for (int b = prev.seg + 1; b <= next.seg; ++b) {
        EdgePos bp{b, Rat(0)};
        if (prev < bp && bp < next) piece.push_back(pts[b]);
      }
      piece.push_back(point_at(next));
      int dart = mb.fwd(ei, static_cast<int>(k));
      if (static_cast<int>(out.seg_points.size()) <= dart / 2) out.seg_points.resize(dart / 2 + 1);
      out.seg_points[dart / 2] = std::move(piece);
      prev = next;
    }
  }
  // rotations from exact angular order of outgoing dart directions
  std::vector<std::vector<int>> at_node(mb.nodes.size());
  for (int d = 0; d < static_cast<int>(mb.darts.size()); ++d)
    at_node[mb.darts[d].node].push_back(d);
  for (int v = 0; v < static_cast<int>(mb.nodes.size()); ++v) {
    auto dir = [&](int dart) {
      const auto& piece = out.seg_points[dart / 2];
      return dart % 2 == 0 ? piece[1] - piece[0] : piece[piece.size() - 2] - piece.back();
    };
    auto& lst = at_node[v];
    std::sort(lst.begin(), lst.end(), [&](int a, int b) { return ccw_less(dir(a), dir(b)); });
    mb.set_rotation(v, lst);
  }
  out.drawing = mb.build();
  return out;
}

Drawing planarize(const GeometricDrawing& g) { return planarize_with_geometry(g).drawing; }

}  // namespace celldraw
