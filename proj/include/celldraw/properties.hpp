#pragma once
#include <optional>
#include <string>
#include <vector>

#include "celldraw/cells.hpp"

namespace celldraw {

// simple closed curve formed by two edge arcs joining common points p, q
struct LensReport {
  int e1 = -1, e2 = -1;
  int p = -1, q = -1;                // common nodes (vertex or crossing)
  int inside[2] = {0, 0};            // nodes strictly inside each side
  std::vector<signed char> node_side;  // per node: -1 on curve, else side 0/1
  bool empty() const { return inside[0] == 0 || inside[1] == 0; }
};

// every edge pair and every pair of their common points whose arcs are
// internally disjoint; sides by flood fill over faces blocked at curve darts
std::vector<LensReport> enumerate_lenses(const Drawing& d);

// true iff the chains of e and f share a crossing node
bool edges_cross(const Drawing& d, int e, int f);

// violation witnesses; nullopt = property holds
std::optional<std::string> simple_violation(const Drawing& d);
std::optional<std::string> non_homotopic_violation(const Drawing& d);
std::optional<std::string> quasiplanar_violation(const Drawing& d);
std::optional<std::string> celltype_violation(const Drawing& d, const CellType& t);

inline bool is_simple_drawing(const Drawing& d) { return !simple_violation(d).has_value(); }
inline bool is_non_homotopic(const Drawing& d) { return !non_homotopic_violation(d).has_value(); }
inline bool is_quasiplanar(const Drawing& d) { return !quasiplanar_violation(d).has_value(); }
inline bool is_celltype_free(const Drawing& d, const CellType& t) {
  return !celltype_violation(d, t).has_value();
}

}  // namespace celldraw
