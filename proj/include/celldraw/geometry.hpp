#pragma once
#include <string>
#include <vector>

#include "celldraw/map.hpp"
#include "celldraw/rational.hpp"

namespace celldraw {

struct Pt {
  Rat x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator*(const Rat& s, const Pt& a) { return {s * a.x, s * a.y}; }
inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

struct GeoVertex {
  std::string name;
  Pt pos;
};

struct GeoEdge {
  std::string name;
  int tail = -1, head = -1;
  std::vector<Pt> bends;
};

struct GeometricDrawing {
  std::vector<GeoVertex> vertices;
  std::vector<GeoEdge> edges;
  std::vector<Pt> polyline(int e) const;
};

// exact position along a polyline: lexicographic (segment, parameter), t in [0,1)
struct EdgePos {
  int seg = 0;
  Rat t;
  auto operator<=>(const EdgePos& o) const {
    if (seg != o.seg) return seg <=> o.seg;
    return t < o.t ? std::strong_ordering::less
                   : (t == o.t ? std::strong_ordering::equal : std::strong_ordering::greater);
  }
  bool operator==(const EdgePos&) const = default;
};

struct CrossingRecord {
  int e1, e2;  // e1 < e2
  Pt p;
  EdgePos pos1, pos2;
};

// structural validity: distinct vertex positions, endpoint references, no
// loops, simple polylines, no edge through a vertex point
void validate_geometry(const GeometricDrawing& g);

// every transversal intersection, exactly once, with exact coordinates;
// throws on overlaps, tangential contacts, vertex hits and triple points
std::vector<CrossingRecord> intersect_all(const GeometricDrawing& g);

// planarization plus the exact geometry of each planarization segment
struct Planarized {
  Drawing drawing;
  std::vector<Pt> node_pos;                 // per node
  std::vector<std::vector<Pt>> seg_points;  // per forward dart of each chain, >= 2 points
  const std::vector<Pt>& piece(int dart) const;  // in forward-dart orientation
};

Planarized planarize_with_geometry(const GeometricDrawing& g);
Drawing planarize(const GeometricDrawing& g);

// counterclockwise angular order around a common origin; exact
bool ccw_less(const Pt& a, const Pt& b);

}  // namespace celldraw
