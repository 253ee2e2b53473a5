#pragma once
#include <string>

#include "celldraw/geometry.hpp"
#include "celldraw/map.hpp"

namespace celldraw {

struct RenderOptions {
  std::string shade_type;  // canonical corner word; empty = no shading
  enum class Layout { Given, Embed, Spring } layout = Layout::Given;
  double width = 800;
};

struct RenderResult {
  std::string svg;
  std::string warning;  // non-empty when a layout fallback was taken
};

// geometric drawing at its own coordinates (layout Given)
RenderResult render_svg(const GeometricDrawing& g, const RenderOptions& opt = {});

// combinatorial drawing; convex-combination embedding with the largest cell
// as outer boundary, spring fallback when the embedding degenerates
RenderResult render_svg(const Drawing& d, const RenderOptions& opt = {});

}  // namespace celldraw
