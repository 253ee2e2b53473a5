#include "celldraw/map.hpp"

#include <algorithm>
#include <numeric>

namespace celldraw {

std::vector<int> Drawing::edge_nodes(int e) const {
  std::vector<int> seq;
  seq.push_back(edges[e].tail);
  for (int d : edges[e].chain) seq.push_back(seg_to(d));
  return seq;
}

namespace {

std::string node_ref(const std::vector<Node>& nodes, int v) {
  if (v < 0 || v >= static_cast<int>(nodes.size())) return "#" + std::to_string(v);
  return nodes[v].name.empty() ? "#" + std::to_string(v) : nodes[v].name;
}

}  // namespace

Drawing build_drawing(std::vector<Node> nodes, std::vector<Dart> darts,
                      std::vector<std::vector<int>> rotations,
                      std::vector<EdgeChain> edges) {
  Drawing d;
  d.nodes = std::move(nodes);
  d.darts = std::move(darts);
  d.rotations = std::move(rotations);
  d.edges = std::move(edges);
  const int nn = static_cast<int>(d.nodes.size());
  const int nd = static_cast<int>(d.darts.size());

  if (static_cast<int>(d.rotations.size()) != nn)
    throw Error(Err::ValidationError, "one rotation list required per node");

  // twin involution without fixed points, origins in range
  for (int i = 0; i < nd; ++i) {
    const Dart& dt = d.darts[i];
    if (dt.node < 0 || dt.node >= nn)
      throw Error(Err::DanglingDart, "dart " + std::to_string(i) + " has no origin node");
    if (dt.twin < 0 || dt.twin >= nd || dt.twin == i || d.darts[dt.twin].twin != i)
      throw Error(Err::DanglingDart, "twin is not an involution at dart " + std::to_string(i));
  }

  // every dart in exactly one rotation, at its origin
  std::vector<int> seen(nd, 0);
  for (int v = 0; v < nn; ++v) {
    for (int dart : d.rotations[v]) {
      if (dart < 0 || dart >= nd)
        throw Error(Err::DanglingDart, "rotation of " + node_ref(d.nodes, v) + " lists unknown dart");
      if (d.darts[dart].node != v)
        throw Error(Err::DanglingDart, "dart " + std::to_string(dart) + " listed at foreign node " +
                                           node_ref(d.nodes, v));
      if (seen[dart]++)
        throw Error(Err::DanglingDart, "dart " + std::to_string(dart) + " in two rotations");
    }
  }
  for (int i = 0; i < nd; ++i)
    if (!seen[i]) throw Error(Err::DanglingDart, "dart " + std::to_string(i) + " missing from rotations");

  // edge chains: endpoints are vertices, interior nodes crossings, no repeats
  std::vector<int> owner(nd, -1);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    EdgeChain& ec = d.edges[e];
    if (ec.chain.empty()) throw Error(Err::ValidationError, "edge " + ec.name + " has empty chain");
    if (ec.tail < 0 || ec.tail >= nn || ec.head < 0 || ec.head >= nn)
      throw Error(Err::ValidationError, "edge " + ec.name + " has missing endpoint");
    if (ec.tail == ec.head)
      throw Error(Err::LoopEdge, "edge " + ec.name + " at " + node_ref(d.nodes, ec.tail));
    if (d.nodes[ec.tail].kind != NodeKind::Vertex || d.nodes[ec.head].kind != NodeKind::Vertex)
      throw Error(Err::ValidationError, "edge " + ec.name + " must end at vertex nodes");
    std::vector<int> visited_crossings;
    for (size_t i = 0; i < ec.chain.size(); ++i) {
      int dart = ec.chain[i];
      if (dart < 0 || dart >= nd)
        throw Error(Err::DanglingDart, "edge " + ec.name + " references unknown dart");
      for (int h : {dart, d.darts[dart].twin}) {
        if (owner[h] != -1)
          throw Error(Err::DanglingDart, "dart " + std::to_string(h) + " claimed by two edges");
        owner[h] = e;
      }
      d.darts[dart].edge = e;
      d.darts[dart].forward = true;
      d.darts[dart].chain_pos = static_cast<int>(i);
      Dart& tw = d.darts[d.darts[dart].twin];
      tw.edge = e;
      tw.forward = false;
      tw.chain_pos = static_cast<int>(i);
      int from = d.darts[dart].node;
      int to = d.darts[d.darts[dart].twin].node;
      int expect = i == 0 ? ec.tail : d.darts[d.darts[ec.chain[i - 1]].twin].node;
      if (from != expect)
        throw Error(Err::ValidationError, "edge " + ec.name + " chain is not contiguous");
      if (i + 1 < ec.chain.size()) {
        if (d.nodes[to].kind != NodeKind::Crossing)
          throw Error(Err::ValidationError,
                      "edge " + ec.name + " meets non-crossing interior node " + node_ref(d.nodes, to));
        visited_crossings.push_back(to);
      } else if (to != ec.head) {
        throw Error(Err::ValidationError, "edge " + ec.name + " chain does not reach its head");
      }
    }
    std::sort(visited_crossings.begin(), visited_crossings.end());
    if (std::adjacent_find(visited_crossings.begin(), visited_crossings.end()) !=
        visited_crossings.end())
      throw Error(Err::SelfCrossing, "edge " + ec.name + " passes a crossing twice");
  }
  for (int i = 0; i < nd; ++i)
    if (owner[i] == -1)
      throw Error(Err::DanglingDart, "dart " + std::to_string(i) + " belongs to no edge");

  // node degrees: crossings exactly 4 with alternating edges, vertices >= 1
  for (int v = 0; v < nn; ++v) {
    const auto& rot = d.rotations[v];
    if (d.nodes[v].kind == NodeKind::Crossing) {
      if (rot.size() != 4)
        throw Error(Err::ValidationError, "crossing " + node_ref(d.nodes, v) + " has degree " +
                                              std::to_string(rot.size()));
      int e0 = d.darts[rot[0]].edge, e1 = d.darts[rot[1]].edge;
      int e2 = d.darts[rot[2]].edge, e3 = d.darts[rot[3]].edge;
      if (e0 != e2 || e1 != e3 || e0 == e1)
        throw Error(Err::TransversalityViolation,
                    "rotation at crossing " + node_ref(d.nodes, v) + " does not alternate edges");
    } else if (rot.empty()) {
      throw Error(Err::ValidationError, "isolated vertex " + node_ref(d.nodes, v));
    }
  }

  // ccw successor table
  d.rot_next.assign(nd, -1);
  for (int v = 0; v < nn; ++v) {
    const auto& rot = d.rotations[v];
    for (size_t i = 0; i < rot.size(); ++i)
      d.rot_next[rot[i]] = rot[(i + 1) % rot.size()];
  }
  d.vertex_count = 0;
  d.crossing_count = 0;
  for (const Node& nde : d.nodes)
    (nde.kind == NodeKind::Vertex ? d.vertex_count : d.crossing_count)++;

  // per-component Euler characteristic (each component is a sphere drawing)
  std::vector<int> comp(nn, -1);
  int ncomp = 0;
  for (int v = 0; v < nn; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int dart : d.rotations[u]) {
        int w = d.darts[d.darts[dart].twin].node;
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<long> vc(ncomp, 0), ec(ncomp, 0), fc(ncomp, 0);
  for (int v = 0; v < nn; ++v) ++vc[comp[v]];
  for (int i = 0; i < nd; ++i)
    if (i < d.darts[i].twin) ++ec[comp[d.darts[i].node]];
  for (const auto& walk : trace_faces(d)) ++fc[comp[d.darts[walk[0]].node]];
  for (int c = 0; c < ncomp; ++c)
    if (vc[c] - ec[c] + fc[c] != 2)
      throw Error(Err::NonSphere, "component Euler characteristic " +
                                      std::to_string(vc[c] - ec[c] + fc[c]) + " != 2");
  return d;
}

std::vector<std::vector<int>> trace_faces(const Drawing& d) {
  std::vector<std::vector<int>> walks;
  std::vector<char> used(d.darts.size(), 0);
  for (int start = 0; start < static_cast<int>(d.darts.size()); ++start) {
    if (used[start]) continue;
    std::vector<int> walk;
    int cur = start;
    do {
      used[cur] = 1;
      walk.push_back(cur);
      cur = d.rot_next[d.darts[cur].twin];
    } while (cur != start);
    walks.push_back(std::move(walk));
  }
  return walks;
}

bool is_connected_drawing(const Drawing& d) {
  if (d.nodes.empty()) return true;
  std::vector<char> vis(d.nodes.size(), 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int dart : d.rotations[u]) {
      int w = d.darts[d.darts[dart].twin].node;
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == d.nodes.size();
}

int MapBuilder::add_node(NodeKind kind, std::string name) {
  nodes.push_back({std::move(name), kind});
  rotations.emplace_back();
  return static_cast<int>(nodes.size()) - 1;
}

int MapBuilder::add_edge(const std::vector<int>& route, std::string name) {
  if (route.size() < 2) throw Error(Err::ValidationError, "edge route needs two nodes");
  EdgeChain ec;
  ec.name = std::move(name);
  ec.tail = route.front();
  ec.head = route.back();
  for (size_t i = 0; i + 1 < route.size(); ++i) {
    int a = static_cast<int>(darts.size());
    darts.push_back({"", route[i], a + 1});
    darts.push_back({"", route[i + 1], a});
    ec.chain.push_back(a);
  }
  edges.push_back(std::move(ec));
  routes.push_back(route);
  return static_cast<int>(edges.size()) - 1;
}

int MapBuilder::fwd(int e, int i) const { return edges[e].chain[i]; }
int MapBuilder::bwd(int e, int i) const { return darts[edges[e].chain[i]].twin; }

void MapBuilder::set_rotation(int node, std::vector<int> order) {
  rotations[node] = std::move(order);
}

Drawing MapBuilder::build() { return build_drawing(nodes, darts, rotations, edges); }

}  // namespace celldraw
