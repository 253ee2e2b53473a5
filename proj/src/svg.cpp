#include "celldraw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "celldraw/cells.hpp"

namespace celldraw {

namespace {

struct XY {
  double x = 0, y = 0;
};

double dist(const XY& a, const XY& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// convex-combination positions with the given cycle pinned on a circle;
// returns false when the result degenerates (coincident points)
bool tutte_embed(const Drawing& d, const std::vector<int>& outer_nodes, std::vector<XY>& pos) {
  const int n = static_cast<int>(d.nodes.size());
  pos.assign(n, XY{});
  std::vector<char> pinned(n, 0);
  const int m = static_cast<int>(outer_nodes.size());
  for (int k = 0; k < m; ++k) {
    // clockwise: cells lie left of their darts, so the outer walk runs
    // clockwise around the rest of the drawing
    double a = -2.0 * M_PI * k / m;
    pos[outer_nodes[k]] = {std::cos(a), std::sin(a)};
    pinned[outer_nodes[k]] = 1;
  }
  std::vector<std::vector<int>> nbr(n);
  for (int v = 0; v < n; ++v)
    for (int dart : d.rotations[v]) nbr[v].push_back(d.seg_to(dart));
  for (int it = 0; it < 4000; ++it) {
    double delta = 0;
    for (int v = 0; v < n; ++v) {
      if (pinned[v] || nbr[v].empty()) continue;
      XY avg;
      for (int u : nbr[v]) avg.x += pos[u].x, avg.y += pos[u].y;
      avg.x /= nbr[v].size();
      avg.y /= nbr[v].size();
      delta = std::max(delta, dist(avg, pos[v]));
      pos[v] = avg;
    }
    if (delta < 1e-12) break;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (dist(pos[a], pos[b]) < 1e-7) return false;
  return true;
}

// deterministic force-directed fallback
void spring_embed(const Drawing& d, std::vector<XY>& pos) {
  const int n = static_cast<int>(d.nodes.size());
  pos.assign(n, XY{});
  for (int v = 0; v < n; ++v) {
    double a = 2.0 * M_PI * v / std::max(1, n) + 0.7 * ((v * 7919) % 97) / 97.0;
    double r = 1.0 + 0.1 * ((v * 104729) % 89) / 89.0;
    pos[v] = {r * std::cos(a), r * std::sin(a)};
  }
  std::vector<std::pair<int, int>> springs;
  for (int dart = 0; dart < static_cast<int>(d.darts.size()); ++dart)
    if (dart < d.darts[dart].twin) springs.push_back({d.seg_from(dart), d.seg_to(dart)});
  const double k = n > 0 ? std::sqrt(4.0 / n) : 1.0;
  double temp = 0.4;
  for (int it = 0; it < 600; ++it) {
    std::vector<XY> disp(n, XY{});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        double dx = pos[a].x - pos[b].x, dy = pos[a].y - pos[b].y;
        double d2 = std::max(1e-9, dx * dx + dy * dy);
        double f = k * k / d2;
        disp[a].x += dx * f, disp[a].y += dy * f;
        disp[b].x -= dx * f, disp[b].y -= dy * f;
      }
    for (auto [a, b] : springs) {
      double dx = pos[a].x - pos[b].x, dy = pos[a].y - pos[b].y;
      double len = std::max(1e-9, std::hypot(dx, dy));
      double f = len / k;
      disp[a].x -= dx / len * f, disp[a].y -= dy / len * f;
      disp[b].x += dx / len * f, disp[b].y += dy / len * f;
    }
    for (int v = 0; v < n; ++v) {
      double len = std::max(1e-9, std::hypot(disp[v].x, disp[v].y));
      double step = std::min(len, temp);
      pos[v].x += disp[v].x / len * step;
      pos[v].y += disp[v].y / len * step;
    }
    temp *= 0.99;
  }
}

struct Canvas {
  double minx = 0, miny = 0, scale = 1, height = 0, margin = 0;
  XY map(const XY& p) const {
    // flip y so mathematical orientation matches screen orientation
    return {(p.x - minx) * scale + margin, height - ((p.y - miny) * scale + margin)};
  }
};

Canvas fit(const std::vector<XY>& pts, double width) {
  Canvas c;
  double maxx = 1, maxy = 1;
  if (!pts.empty()) {
    c.minx = c.miny = 1e300;
    maxx = maxy = -1e300;
    for (const XY& p : pts) {
      c.minx = std::min(c.minx, p.x), maxx = std::max(maxx, p.x);
      c.miny = std::min(c.miny, p.y), maxy = std::max(maxy, p.y);
    }
  }
  double w = std::max(1e-9, maxx - c.minx), h = std::max(1e-9, maxy - c.miny);
  c.margin = width * 0.05;
  c.scale = (width - 2 * c.margin) / std::max(w, h);
  c.height = h * c.scale + 2 * c.margin;
  return c;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << v;
  std::string s = os.str();
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s.empty() || s == "-0" ? "0" : s;
}

double signed_area(const std::vector<XY>& poly) {
  double a = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const XY& p = poly[i];
    const XY& q = poly[(i + 1) % poly.size()];
    a += p.x * q.y - p.y * q.x;
  }
  return a / 2;
}

std::string polygon_path(const std::vector<XY>& poly, const Canvas& cv) {
  std::string s;
  for (size_t i = 0; i < poly.size(); ++i) {
    XY p = cv.map(poly[i]);
    s += (i ? "L" : "M") + fmt(p.x) + " " + fmt(p.y);
  }
  return s + "Z";
}

// pieces[dart]: drawn polyline of the dart's segment, oriented along the dart
RenderResult emit(const Drawing& d, const std::vector<XY>& node_pos,
                  const std::vector<std::vector<XY>>& pieces, const RenderOptions& opt,
                  const std::string& warning) {
  std::vector<XY> all = node_pos;
  for (const auto& piece : pieces) all.insert(all.end(), piece.begin(), piece.end());
  Canvas cv = fit(all, opt.width);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.width) << "\" height=\""
      << fmt(cv.height) << "\" viewBox=\"0 0 " << fmt(opt.width) << " " << fmt(cv.height)
      << "\">\n";
  if (!warning.empty()) out << "  <!-- " << warning << " -->\n";

  if (!opt.shade_type.empty()) {
    for (const Cell& cell : census(d).cells) {
      if (cell.word != opt.shade_type) continue;
      std::vector<XY> poly;
      for (int dart : cell.walk) {
        const auto& piece = pieces[dart];
        poly.insert(poly.end(), piece.begin(), piece.end() - 1);
      }
      if (poly.size() < 3) continue;
      std::string path = polygon_path(poly, cv);
      // drawn area is the walk's left side; a clockwise polygon means the
      // cell is the unbounded region, shaded via even-odd with a border rect
      if (signed_area(poly) < 0)
        path = "M-9 -9H" + fmt(opt.width + 9) + "V" + fmt(cv.height + 9) + "H-9Z " + path;
      out << "  <path d=\"" << path
          << "\" fill=\"#b9d3ee\" fill-opacity=\"0.75\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
    }
  }

  for (const EdgeChain& e : d.edges) {
    out << "  <path d=\"";
    bool first = true;
    for (int dart : e.chain) {
      const auto& piece = pieces[dart];
      for (size_t i = first ? 0 : 1; i < piece.size(); ++i) {
        XY p = cv.map(piece[i]);
        out << (first && i == 0 ? "M" : "L") << fmt(p.x) << " " << fmt(p.y);
      }
      first = false;
    }
    out << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.4\"/>\n";
  }
  double r = opt.width / 160;
  for (size_t v = 0; v < d.nodes.size(); ++v) {
    if (d.nodes[v].kind != NodeKind::Vertex) continue;
    XY p = cv.map(node_pos[v]);
    out << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"" << fmt(r)
        << "\" fill=\"#111\"/>\n";
  }
  out << "</svg>\n";
  return {out.str(), warning};
}

std::vector<std::vector<XY>> straight_pieces(const Drawing& d, const std::vector<XY>& pos) {
  std::vector<std::vector<XY>> pieces(d.darts.size());
  for (int dart = 0; dart < static_cast<int>(d.darts.size()); ++dart)
    pieces[dart] = {pos[d.seg_from(dart)], pos[d.seg_to(dart)]};
  return pieces;
}

}  // namespace

RenderResult render_svg(const GeometricDrawing& g, const RenderOptions& opt) {
  Planarized p = planarize_with_geometry(g);
  std::vector<XY> pos;
  for (const Pt& q : p.node_pos) pos.push_back({q.x.get_d(), q.y.get_d()});
  std::vector<std::vector<XY>> pieces(p.drawing.darts.size());
  for (int dart = 0; dart < static_cast<int>(p.drawing.darts.size()); ++dart) {
    std::vector<XY> xy;
    for (const Pt& q : p.piece(dart)) xy.push_back({q.x.get_d(), q.y.get_d()});
    if (dart % 2) std::reverse(xy.begin(), xy.end());
    pieces[dart] = std::move(xy);
  }
  return emit(p.drawing, pos, pieces, opt, "");
}

RenderResult render_svg(const Drawing& d, const RenderOptions& opt) {
  std::vector<XY> pos;
  std::string warning;
  bool embedded = false;
  if (opt.layout != RenderOptions::Layout::Spring && is_connected_drawing(d) &&
      !d.darts.empty()) {
    auto faces = trace_faces(d);
    size_t outer = 0;
    for (size_t f = 1; f < faces.size(); ++f)
      if (faces[f].size() > faces[outer].size()) outer = f;
    std::vector<int> ring;
    std::set<int> seen;
    bool ok = true;
    for (int dart : faces[outer]) {
      int v = d.darts[dart].node;
      if (!seen.insert(v).second) ok = false;
      ring.push_back(v);
    }
    if (ok && ring.size() >= 3) embedded = tutte_embed(d, ring, pos);
    if (!embedded) warning = "layout fallback: convex embedding degenerated, using spring layout";
  }
  if (!embedded) spring_embed(d, pos);
  return emit(d, pos, straight_pieces(d, pos), opt, warning);
}

}  // namespace celldraw
