#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "celldraw/cells.hpp"
#include "celldraw/rational.hpp"

namespace celldraw {

struct VerifierReport {
  std::string claim;
  bool pass = false;
  std::vector<std::string> checks;    // one line per sub-check
  std::string witness;                // first failure site, empty on pass
  std::map<std::string, Rat> values;  // exact quantities used by the checks
};

// cell charges and redistributed vertex charges, all exact
struct ChargeLedger {
  std::vector<Rat> ch1, ch2;  // per cell, census order
  std::vector<Rat> ch3;       // per node id; meaningful at vertex nodes
  Rat min_ch3;
};

enum class DischargeMode { NonHomotopic, Simple };

// sum over cells of (size - 4) equals 4(n - 2)
VerifierReport verify_vertex_cell_identity(const Drawing& d);

// 3*#XXX + #VXX <= total inner segments on cells of size >= 5
VerifierReport verify_corridor_inequality(const Drawing& d);

// no cells of size <= 2; size-3 all XXX; size-4 in {XXXX,VXX}; size-5 in
// {XXXXX,VXXX,VVX}
VerifierReport verify_small_cell_classification(const Drawing& d);

// q(c) = 3e+2v-12 per-type values, the chain sum q >= -3*XXX - VXX +
// sum_{size>=5} e_in >= 0, and the resulting bound 2|E| <= 12(n-2)
VerifierReport verify_fivezero_chain(const Drawing& d);

// three-stage charging; asserts the five steps and exact charge conservation
std::pair<ChargeLedger, VerifierReport> run_discharging(const Drawing& d, DischargeMode mode);

struct DensityRow {
  std::string label;
  bool has_bound = true;
  Rat bound;
  bool holds = false;
  bool tight = false;
  std::string note;
};

struct DensityReport {
  long n = 0, edge_count = 0, crossings = 0;
  bool simple_drawing = false, non_homotopic = false, quasiplanar = false;
  bool simple_graph = false;  // no parallel edges
  std::map<std::string, bool> free_of;  // canonical small types -> absent
  std::vector<DensityRow> rows;
};

// style + freeness detection and every applicable density bound row
DensityReport density_report(const Drawing& d);

}  // namespace celldraw
