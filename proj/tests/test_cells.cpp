#include "celldraw/cells.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace celldraw;

TEST_CASE("plane K3 census: two VVV cells of size 6") {
  Census c = census(fixtures::k3());
  REQUIRE(c.cells.size() == 2);
  for (const Cell& cell : c.cells) {
    CHECK(cell.word == "VVV");
    CHECK(cell.size() == 6);
    CHECK(cell.e_in == 0);
  }
  CHECK(count_type(c, parse_type("6_3")) == 2);
  CHECK(count_type(c, parse_type("XXX")) == 0);
}

TEST_CASE("X of two crossing edges: one cell of type VXVXVXVX, size 12") {
  Census c = census(fixtures::x_tree());
  REQUIRE(c.cells.size() == 1);
  const Cell& cell = c.cells[0];
  CHECK(cell.word == canonical_word("VXVXVXVX"));
  CHECK(cell.v == 4);
  CHECK(cell.x == 4);
  CHECK(cell.e == 8);
  CHECK(cell.size() == 12);
  CHECK(cell.e_in == 0);
}

TEST_CASE("census requires a connected image") {
  CHECK_THROWS_AS((void)census(fixtures::two_disjoint_edges()), Error);
}

TEST_CASE("canonical form is invariant under rotation and reversal") {
  CHECK(canonical_word("XXV") == "VXX");
  CHECK(canonical_word("XVX") == "VXX");
  CHECK(canonical_word("VXXVX") == canonical_word("XVXXV"));
  CHECK(canonical_word("VVXX") == canonical_word("XXVV"));
  CHECK(canonical_word("VXVXX") == canonical_word(std::string("XXVXV")));
}

TEST_CASE("parse_type accepts words and unambiguous shorthands") {
  CHECK(parse_type("3_0").word == "XXX");
  CHECK(parse_type("6_3").word == "VVV");
  CHECK(parse_type("4_1").word == "VXX");
  CHECK(parse_type("5_1").word == "VXXX");
  CHECK(parse_type("5_2").word == "VVX");
  CHECK(parse_type("4_0").word == "XXXX");
  CHECK(parse_type("5_0").word == "XXXXX");
  CHECK(parse_type("XXV").word == "VXX");
}

TEST_CASE("ambiguous and invalid shorthands are rejected") {
  CHECK_THROWS_AS((void)parse_type("6_2"), Error);  // VVXX vs VXVX
  CHECK_THROWS_AS((void)parse_type("2_2"), Error);
  CHECK_THROWS_AS((void)parse_type("1_1"), Error);
  CHECK_THROWS_AS((void)parse_type(""), Error);
  CHECK_THROWS_AS((void)parse_type("VAX"), Error);
}

TEST_CASE("type_shorthand round-trips unambiguous classes") {
  CHECK(type_shorthand("XXX") == "3_0");
  CHECK(type_shorthand("VXX") == "4_1");
  CHECK(type_shorthand("VVXX") == "");  // 6_2 is ambiguous
  CHECK(type_shorthand("VVV") == "6_3");
}

TEST_CASE("size identity: size = |word| + #V") {
  for (const char* w : {"XXX", "VXX", "VVX", "VXXX", "VVV"}) {
    CellType t = parse_type(w);
    CHECK(t.size() == static_cast<int>(t.word.size()) + t.vertices());
  }
}
