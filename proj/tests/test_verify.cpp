#include "celldraw/verify.hpp"

#include "celldraw/geometry.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace celldraw;

namespace {

Drawing k5() { return planarize(fixtures::geo_complete(fixtures::parabola_points(5))); }

}  // namespace

TEST_CASE("vertex-cell identity holds on fixed drawings") {
  auto r1 = verify_vertex_cell_identity(fixtures::k3());
  CHECK(r1.pass);
  CHECK(r1.values.at("sum_size_minus_4") == 4);
  auto r2 = verify_vertex_cell_identity(fixtures::x_tree());
  CHECK(r2.pass);
  CHECK(r2.values.at("sum_size_minus_4") == 8);
  auto r3 = verify_vertex_cell_identity(k5());
  CHECK(r3.pass);
  CHECK(r3.values.at("4(n-2)") == 12);
}

TEST_CASE("vertex-cell identity rejects empty and disconnected input") {
  Drawing empty = build_drawing({}, {}, {}, {});
  CHECK_THROWS_AS((void)verify_vertex_cell_identity(empty), Error);
  CHECK_THROWS_AS((void)verify_vertex_cell_identity(fixtures::two_disjoint_edges()), Error);
}

TEST_CASE("corridor inequality: zero on K3, tight on convex K5") {
  auto r1 = verify_corridor_inequality(fixtures::k3());
  CHECK(r1.pass);
  CHECK(r1.values.at("3*XXX + VXX") == 0);
  CHECK(r1.values.at("inner_segments_ge5") == 0);
  auto r2 = verify_corridor_inequality(k5());
  CHECK(r2.pass);
  CHECK(r2.values.at("3*XXX + VXX") == 5);
  CHECK(r2.values.at("inner_segments_ge5") == 5);
}

TEST_CASE("small-cell classification passes on K3 and K5, precondition fails on a lens") {
  CHECK(verify_small_cell_classification(fixtures::k3()).pass);
  CHECK(verify_small_cell_classification(k5()).pass);
  GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}},
                {"b", {rat(4), rat(0)}},
                {"c", {rat(0), rat(1)}},
                {"d", {rat(4), rat(1)}}};
  g.edges = {{"tent", 0, 1, {{rat(2), rat(2)}}}, {"bar", 2, 3, {}}};
  try {
    verify_small_cell_classification(planarize(g));
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code == Err::PreconditionFailed);
  }
}

TEST_CASE("fivezero chain on K3 and the X-tree") {
  auto r1 = verify_fivezero_chain(fixtures::k3());
  CHECK(r1.pass);
  CHECK(r1.values.at("sum_q") == 6);
  CHECK(r1.values.at("2|E|") == 6);
  auto r2 = verify_fivezero_chain(fixtures::x_tree());
  CHECK(r2.pass);
  CHECK(r2.values.at("sum_q") == 20);
}

TEST_CASE("fivezero chain refuses XXXXX cells with a witness") {
  try {
    verify_fivezero_chain(k5());
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code == Err::PreconditionFailed);
    CHECK(std::string(e.what()).find("XXXXX") != std::string::npos);
  }
}

TEST_CASE("discharging on K3: nonhomotopic floor holds, simple floor does not") {
  auto [led, rep] = run_discharging(fixtures::k3(), DischargeMode::NonHomotopic);
  CHECK(rep.pass);
  CHECK(led.min_ch3 == rat(14, 15));
  CHECK(rep.values.at("sum_ch1") == 4);
  CHECK(rep.values.at("sum_ch2") == 4);
  CHECK(rep.values.at("conservation_residual") == 0);

  auto [led2, rep2] = run_discharging(fixtures::k3(), DischargeMode::Simple);
  CHECK(!rep2.pass);  // degree-2 vertices keep only 14/15 < 6/5
  CHECK(led2.min_ch3 == rat(14, 15));
}

TEST_CASE("discharging on the X-tree is tight in simple mode") {
  auto [led, rep] = run_discharging(fixtures::x_tree(), DischargeMode::Simple);
  CHECK(rep.pass);
  CHECK(led.min_ch3 == rat(9, 5));
  CHECK(rep.values.at("2|E|/5 + n*min_ch3") == rep.values.at("4n-8"));
  CHECK(rep.values.at("conservation_residual") == 0);
}

TEST_CASE("discharging preconditions: XXX cell and style are enforced") {
  GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}}, {"b", {rat(6), rat(0)}},  {"c", {rat(1), rat(-1)}},
                {"d", {rat(4), rat(2)}}, {"e", {rat(5), rat(-1)}}, {"f", {rat(2), rat(2)}}};
  g.edges = {{"e0", 0, 1, {}}, {"e1", 2, 3, {}}, {"e2", 4, 5, {}}};
  try {
    run_discharging(planarize(g), DischargeMode::NonHomotopic);
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code == Err::PreconditionFailed);
    CHECK(std::string(e.what()).find("XXX") != std::string::npos);
  }
}

TEST_CASE("density report on convex K5") {
  DensityReport rep = density_report(k5());
  CHECK(rep.simple_graph);
  CHECK(rep.simple_drawing);
  CHECK(rep.non_homotopic);
  CHECK(rep.quasiplanar);
  CHECK(rep.free_of.at("XXX"));
  CHECK(!rep.free_of.at("XXXXX"));
  CHECK(!rep.free_of.at("VXX"));
  bool saw_simple_graph = false, saw_qp_simple = false, saw_fourone = false;
  for (const DensityRow& row : rep.rows) {
    CHECK(row.holds);
    if (row.label == "simple graph") {
      saw_simple_graph = true;
      CHECK(row.tight);  // |E| = C(5,2)
    }
    if (row.label == "quasiplanar simple drawing") {
      saw_qp_simple = true;
      CHECK(row.bound == rat(25, 2));
    }
    if (row.label == "4_1-free simple drawing") saw_fourone = true;
  }
  CHECK(saw_simple_graph);
  CHECK(saw_qp_simple);
  CHECK(!saw_fourone);
}

TEST_CASE("density report styles on a non-simple drawing") {
  GeometricDrawing g;
  g.vertices = {{"a", {rat(0), rat(0)}},
                {"b", {rat(4), rat(0)}},
                {"c", {rat(0), rat(1)}},
                {"d", {rat(4), rat(1)}}};
  g.edges = {{"tent", 0, 1, {{rat(2), rat(2)}}}, {"bar", 2, 3, {}}};
  DensityReport rep = density_report(planarize(g));
  CHECK(!rep.simple_drawing);
  CHECK(!rep.non_homotopic);
  CHECK(rep.quasiplanar);
  CHECK(rep.simple_graph);
  for (const DensityRow& row : rep.rows) CHECK(row.label == "simple graph");
}
