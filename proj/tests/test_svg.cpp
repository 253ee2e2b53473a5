#include <doctest.h>

#include "celldraw/svg.hpp"
#include "fixtures.hpp"

using namespace celldraw;

TEST_CASE("geometric render draws edges and vertices") {
  auto res = render_svg(fixtures::geo_k3());
  CHECK(res.warning.empty());
  CHECK(res.svg.find("<svg") == 0);
  CHECK(res.svg.find("<circle") != std::string::npos);
  CHECK(res.svg.find("stroke=\"#222\"") != std::string::npos);
}

TEST_CASE("map render embeds a 3-connected-ish drawing without fallback") {
  auto res = render_svg(fixtures::k3());
  CHECK(res.warning.empty());
  CHECK(res.svg.find("<circle") != std::string::npos);
}

TEST_CASE("tree of crossings falls back to spring layout") {
  // every face walk of the x-tree repeats nodes, so the convex embedding
  // cannot pin an outer ring
  auto res = render_svg(fixtures::x_tree());
  CHECK(!res.warning.empty());
  CHECK(res.svg.find("<!--") != std::string::npos);
}

TEST_CASE("shading emits filled cell paths") {
  RenderOptions opt;
  opt.shade_type = "VVV";
  auto res = render_svg(fixtures::k3(), opt);
  // K3 has two VVV cells; one is the outer cell -> even-odd rectangle trick
  CHECK(res.svg.find("fill=\"#b9d3ee\"") != std::string::npos);
  CHECK(res.svg.find("fill-rule=\"evenodd\"") != std::string::npos);

  RenderOptions none;
  none.shade_type = "XXXX";
  auto res2 = render_svg(fixtures::k3(), none);
  CHECK(res2.svg.find("fill=\"#b9d3ee\"") == std::string::npos);
}

TEST_CASE("geometric shading of a crossing cell") {
  // two crossing segments plus a surrounding square: shade the VXX cells
  GeometricDrawing g;
  auto V = [&](std::string n, long x, long y) {
    g.vertices.push_back({std::move(n), {rat(x), rat(y)}});
    return static_cast<int>(g.vertices.size()) - 1;
  };
  int a = V("a", 0, 0), b = V("b", 4, 0), c = V("c", 4, 4), d = V("d", 0, 4);
  g.edges.push_back({"ab", a, b, {}});
  g.edges.push_back({"bc", b, c, {}});
  g.edges.push_back({"cd", c, d, {}});
  g.edges.push_back({"da", d, a, {}});
  g.edges.push_back({"ac", a, c, {}});
  g.edges.push_back({"bd", b, d, {}});
  RenderOptions opt;
  opt.shade_type = "VVX";
  auto res = render_svg(g, opt);
  CHECK(res.svg.find("fill=\"#b9d3ee\"") != std::string::npos);
}
