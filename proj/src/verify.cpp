#include "celldraw/verify.hpp"

#include <algorithm>
#include <set>

#include "celldraw/properties.hpp"

namespace celldraw {

namespace {

void need(bool cond, const std::string& msg) {
  if (!cond) throw Error(Err::PreconditionFailed, msg);
}

std::string cell_label(const Drawing& d, const Cell& c) {
  std::string s = c.word + " [";
  for (size_t i = 0; i < c.walk.size(); ++i) {
    const Node& n = d.nodes[d.darts[c.walk[i]].node];
    s += (i ? " " : "") + (n.name.empty() ? "#" + std::to_string(d.darts[c.walk[i]].node) : n.name);
  }
  return s + "]";
}

void check_line(VerifierReport& r, bool ok, const std::string& desc, const std::string& witness) {
  r.checks.push_back(desc + (ok ? "  [ok]" : "  [FAIL]"));
  if (!ok && r.witness.empty()) r.witness = witness.empty() ? desc : witness;
  if (!ok) r.pass = false;
}

}  // namespace

VerifierReport verify_vertex_cell_identity(const Drawing& d) {
  if (d.edges.empty()) throw Error(Err::NoEdges, "identity needs at least one edge");
  Census c = census(d);
  VerifierReport r;
  r.claim = "vertex-cells";
  r.pass = true;
  long lhs = 0;
  for (const Cell& cell : c.cells) lhs += cell.size() - 4;
  long rhs = 4L * (c.n - 2);
  r.values["sum_size_minus_4"] = rat(lhs);
  r.values["4(n-2)"] = rat(rhs);
  check_line(r, lhs == rhs,
             "sum over cells of (size - 4) = 4(n - 2): " + std::to_string(lhs) + " = " +
                 std::to_string(rhs),
             "");
  return r;
}

VerifierReport verify_corridor_inequality(const Drawing& d) {
  Census c = census(d);
  need(c.n >= 3, "corridor inequality needs n >= 3");
  if (auto w = non_homotopic_violation(d)) need(false, "drawing is not non-homotopic: " + *w);
  VerifierReport r;
  r.claim = "corridor";
  r.pass = true;
  long lhs = 3L * count_type(c, parse_type("XXX")) + count_type(c, parse_type("VXX"));
  long rhs = 0;
  for (const Cell& cell : c.cells)
    if (cell.size() >= 5) rhs += cell.e_in;
  r.values["3*XXX + VXX"] = rat(lhs);
  r.values["inner_segments_ge5"] = rat(rhs);
  check_line(r, lhs <= rhs,
             "3*#XXX + #VXX <= inner segments on cells of size >= 5: " + std::to_string(lhs) +
                 " <= " + std::to_string(rhs),
             "");
  return r;
}

VerifierReport verify_small_cell_classification(const Drawing& d) {
  Census c = census(d);
  need(c.n >= 3, "small-cell classification needs n >= 3");
  if (auto w = non_homotopic_violation(d)) need(false, "drawing is not non-homotopic: " + *w);
  VerifierReport r;
  r.claim = "small-cells";
  r.pass = true;
  static const std::set<std::string> ok4 = {"VXX", "XXXX"};
  static const std::set<std::string> ok5 = {"VVX", "VXXX", "XXXXX"};
  const Cell* bad = nullptr;
  std::string rule;
  for (const Cell& cell : c.cells) {
    int s = cell.size();
    if (s <= 2) { bad = &cell; rule = "no cells of size <= 2"; break; }
    if (s == 3 && cell.word != "XXX") { bad = &cell; rule = "size-3 cells are XXX"; break; }
    if (s == 4 && !ok4.count(cell.word)) { bad = &cell; rule = "size-4 cells are XXXX or VXX"; break; }
    if (s == 5 && !ok5.count(cell.word)) { bad = &cell; rule = "size-5 cells are XXXXX, VXXX or VVX"; break; }
  }
  check_line(r, bad == nullptr,
             "every cell of size <= 5 matches the non-homotopic classification",
             bad ? rule + " violated by " + cell_label(d, *bad) : "");
  return r;
}

VerifierReport verify_fivezero_chain(const Drawing& d) {
  Census c = census(d);
  need(c.n >= 3, "chain needs n >= 3");
  if (auto w = non_homotopic_violation(d)) need(false, "drawing is not non-homotopic: " + *w);
  for (const Cell& cell : c.cells)
    if (cell.word == "XXXXX") need(false, "drawing has a XXXXX cell: " + cell_label(d, cell));
  VerifierReport r;
  r.claim = "fivezero-chain";
  r.pass = true;

  long sum_q = 0, inner_ge5 = 0;
  int n_xxx = 0, n_vxx = 0;
  const Cell* bad = nullptr;
  std::string rule;
  for (const Cell& cell : c.cells) {
    long q = 3L * cell.e + 2L * cell.v - 12;
    sum_q += q;
    if (cell.size() >= 5) inner_ge5 += cell.e_in;
    if (cell.word == "XXX") n_xxx++;
    if (cell.word == "VXX") n_vxx++;
    bool ok = true;
    if (cell.word == "XXX") ok = q == -3;
    else if (cell.word == "VXX") ok = q == -1;
    else if (cell.word == "XXXX") ok = q == 0;
    else if (cell.word == "VXXX") ok = q == 2 && cell.e_in == 2;
    else if (cell.word == "VVX") ok = q == 1 && cell.e_in == 0;
    else if (cell.size() >= 6) ok = q >= cell.e_in;
    else ok = false;  // unexpected small type; classification must hold
    if (!ok && !bad) { bad = &cell; rule = "per-type value of q(c) = 3e+2v-12"; }
  }
  check_line(r, bad == nullptr, "per-type values of q(c) = 3e(c)+2v(c)-12",
             bad ? rule + " violated by " + cell_label(d, *bad) : "");

  long lower = -3L * n_xxx - n_vxx + inner_ge5;
  r.values["sum_q"] = rat(sum_q);
  r.values["-3*XXX - VXX + inner_ge5"] = rat(lower);
  r.values["2|E|"] = rat(2 * c.edge_count);
  r.values["12(n-2)"] = rat(12L * (c.n - 2));
  check_line(r, sum_q == 12L * (c.n - 2) - 2 * c.edge_count,
             "sum q = 12(n-2) - 2|E|: " + std::to_string(sum_q) + " = " +
                 std::to_string(12L * (c.n - 2) - 2 * c.edge_count),
             "");
  check_line(r, sum_q >= lower,
             "sum q >= -3*#XXX - #VXX + inner segments (size >= 5): " + std::to_string(sum_q) +
                 " >= " + std::to_string(lower),
             "");
  check_line(r, lower >= 0, "-3*#XXX - #VXX + inner segments >= 0: " + std::to_string(lower), "");
  check_line(r, 2 * c.edge_count <= 12L * (c.n - 2),
             "2|E| <= 12(n-2): " + std::to_string(2 * c.edge_count) + " <= " +
                 std::to_string(12L * (c.n - 2)),
             "");
  return r;
}

std::pair<ChargeLedger, VerifierReport> run_discharging(const Drawing& d, DischargeMode mode) {
  Census c = census(d);
  need(c.n >= 3, "discharging needs n >= 3");
  if (auto w = celltype_violation(d, parse_type("XXX")))
    need(false, "drawing is not XXX-free: " + *w);
  if (mode == DischargeMode::Simple) {
    if (auto w = simple_violation(d)) need(false, "drawing is not simple: " + *w);
  } else {
    if (auto w = non_homotopic_violation(d)) need(false, "drawing is not non-homotopic: " + *w);
  }

  ChargeLedger led;
  VerifierReport r;
  r.claim = mode == DischargeMode::Simple ? "discharging-simple" : "discharging-nh";
  r.pass = true;

  const size_t nc = c.cells.size();
  led.ch1.resize(nc);
  led.ch2.resize(nc);
  for (size_t i = 0; i < nc; ++i) {
    const Cell& cell = c.cells[i];
    led.ch1[i] = rat(cell.size() - 4);
    if (cell.word == "VXX")
      led.ch2[i] = led.ch1[i] + rat(1, 5);
    else if (cell.size() >= 5)
      led.ch2[i] = led.ch1[i] - rat(cell.e_in, 5);
    else
      led.ch2[i] = led.ch1[i];
  }
  led.ch3.assign(d.nodes.size(), Rat(0));
  for (size_t i = 0; i < nc; ++i) {
    const Cell& cell = c.cells[i];
    if (cell.v == 0) continue;
    Rat share = (led.ch2[i] - rat(cell.v, 5)) / cell.v;
    for (int dart : cell.walk) {
      int node = d.darts[dart].node;
      if (d.nodes[node].kind == NodeKind::Vertex) led.ch3[node] += share;
    }
  }
  bool have_min = false;
  int argmin = -1;
  for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v) {
    if (d.nodes[v].kind != NodeKind::Vertex) continue;
    if (!have_min || led.ch3[v] < led.min_ch3) {
      led.min_ch3 = led.ch3[v];
      argmin = v;
      have_min = true;
    }
  }

  Rat sum1 = 0, sum2 = 0, sum3 = 0, corner_fifths = 0;
  for (size_t i = 0; i < nc; ++i) sum1 += led.ch1[i], sum2 += led.ch2[i];
  for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
    if (d.nodes[v].kind == NodeKind::Vertex) sum3 += led.ch3[v];
  for (const Cell& cell : c.cells) corner_fifths += rat(cell.v, 5);

  r.values["sum_ch1"] = sum1;
  r.values["sum_ch2"] = sum2;
  r.values["min_ch3"] = led.min_ch3;
  check_line(r, sum1 == rat(4L * (c.n - 2)),
             "(i) sum ch1 = 4(n-2): " + rat_str(sum1) + " = " + std::to_string(4L * (c.n - 2)),
             "");
  check_line(r, sum2 <= sum1, "(ii) sum ch2 <= sum ch1: " + rat_str(sum2) + " <= " + rat_str(sum1),
             "");
  const Cell* bad = nullptr;
  for (size_t i = 0; i < nc && !bad; ++i)
    if (led.ch2[i] < rat(c.cells[i].v, 5)) bad = &c.cells[i];
  check_line(r, bad == nullptr, "(iii) ch2(c) >= v(c)/5 for every cell",
             bad ? "ch2 below v/5 at " + cell_label(d, *bad) : "");
  Rat floor = mode == DischargeMode::Simple ? rat(6, 5) : rat(4, 5);
  check_line(r, have_min && led.min_ch3 >= floor,
             "(iv) min ch3 = " + rat_str(led.min_ch3) + " >= " + rat_str(floor),
             argmin >= 0 ? "minimum at vertex " + d.nodes[argmin].name : "no vertices");

  Rat lhs5 = rat(2 * c.edge_count, 5) + c.n * led.min_ch3;
  Rat rhs5 = rat(4L * c.n - 8);
  r.values["2|E|/5 + n*min_ch3"] = lhs5;
  r.values["4n-8"] = rhs5;
  check_line(r, lhs5 <= rhs5,
             "(v) 2|E|/5 + n*min ch3 <= 4n-8: " + rat_str(lhs5) + " <= " + rat_str(rhs5), "");
  long cap = mode == DischargeMode::Simple ? 7L * c.n - 20 : 8L * c.n - 20;
  r.values["edge_cap"] = rat(cap);
  check_line(r, c.edge_count <= cap,
             "|E| <= " + std::string(mode == DischargeMode::Simple ? "7n-20" : "8n-20") + ": " +
                 std::to_string(c.edge_count) + " <= " + std::to_string(cap),
             "");

  Rat residual = sum2 - corner_fifths - sum3;
  r.values["conservation_residual"] = residual;
  std::string culprit;
  if (residual != 0)
    for (size_t i = 0; i < nc; ++i)
      if (c.cells[i].v == 0 && led.ch2[i] != 0) {
        culprit = "undistributed charge on vertex-free cell " + cell_label(d, c.cells[i]);
        break;
      }
  check_line(r, residual == 0,
             "charge conservation: sum ch3 + sum v(c)/5 = sum ch2 (residual " + rat_str(residual) +
                 ")",
             culprit);
  return {led, r};
}

DensityReport density_report(const Drawing& d) {
  Census c = census(d);
  DensityReport rep;
  rep.n = c.n;
  rep.edge_count = c.edge_count;
  rep.crossings = c.crossings;
  rep.simple_drawing = is_simple_drawing(d);
  rep.non_homotopic = rep.simple_drawing || is_non_homotopic(d);
  rep.quasiplanar = is_quasiplanar(d);
  std::set<std::pair<int, int>> endpoint_pairs;
  rep.simple_graph = true;
  for (const EdgeChain& e : d.edges) {
    auto key = std::minmax(e.tail, e.head);
    if (!endpoint_pairs.insert({key.first, key.second}).second) rep.simple_graph = false;
  }
  for (const std::string& w : small_type_classes(5))
    rep.free_of[w] = c.by_type.find(w) == c.by_type.end();

  auto row = [&](const std::string& label, Rat bound) {
    DensityRow r;
    r.label = label;
    r.bound = bound;
    r.holds = rat(rep.edge_count) <= bound;
    r.tight = rat(rep.edge_count) == bound;
    rep.rows.push_back(r);
  };
  if (rep.simple_graph) row("simple graph", rat(rep.n * (rep.n - 1), 2));
  if (rep.non_homotopic && rep.free_of.at("XXXXX")) row("5_0-free non-homotopic", rat(6 * rep.n - 12));
  if (rep.non_homotopic && rep.free_of.at("XXX")) row("3_0-free non-homotopic", rat(8 * rep.n - 20));
  if (rep.simple_drawing && rep.free_of.at("XXX")) row("3_0-free simple drawing", rat(7 * rep.n - 20));
  if (rep.non_homotopic && rep.quasiplanar) row("quasiplanar non-homotopic", rat(8 * rep.n - 20));
  if (rep.simple_drawing && rep.quasiplanar)
    row("quasiplanar simple drawing", rat(13 * rep.n, 2) - 20);
  if (rep.simple_drawing && rep.free_of.at("VXX")) {
    DensityRow r;
    r.label = "4_1-free simple drawing";
    r.has_bound = false;
    r.holds = true;
    r.note = "no linear bound applies; quadratic regime";
    rep.rows.push_back(r);
  }
  return rep;
}

}  // namespace celldraw
