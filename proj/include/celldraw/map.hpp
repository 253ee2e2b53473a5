#pragma once
#include <string>
#include <vector>

#include "celldraw/error.hpp"

namespace celldraw {

enum class NodeKind { Vertex, Crossing };

struct Node {
  std::string name;
  NodeKind kind = NodeKind::Vertex;
};

// half-edge of the planarization; origin node + involutive twin
struct Dart {
  std::string name;
  int node = -1;
  int twin = -1;
  // filled in by build_drawing:
  int edge = -1;     // owning edge chain
  int chain_pos = -1;  // index into the chain (of this dart or its twin)
  bool forward = false;  // appears in the chain itself (tail->head direction)
};

struct EdgeChain {
  std::string name;
  int tail = -1, head = -1;  // vertex nodes
  std::vector<int> chain;    // forward darts tail -> head, one per segment
};

// validated rotation-system drawing on the sphere
struct Drawing {
  std::vector<Node> nodes;
  std::vector<Dart> darts;
  std::vector<std::vector<int>> rotations;  // per node, counterclockwise outgoing darts
  std::vector<EdgeChain> edges;

  std::vector<int> rot_next;  // dart -> ccw-next outgoing dart at the same node
  int vertex_count = 0;
  int crossing_count = 0;

  // face-walk successor: rotation-next of twin(d); faces lie left of their darts
  int succ(int d) const { return rot_next[darts[d].twin]; }
  int seg_from(int d) const { return darts[d].node; }
  int seg_to(int d) const { return darts[darts[d].twin].node; }
  bool inner_segment(int d) const {
    return nodes[seg_from(d)].kind == NodeKind::Crossing &&
           nodes[seg_to(d)].kind == NodeKind::Crossing;
  }
  int segment_count() const { return static_cast<int>(darts.size()) / 2; }
  // node sequence of an edge: tail, crossings..., head
  std::vector<int> edge_nodes(int e) const;
};

// raw components -> validated Drawing; throws on any invariant violation
Drawing build_drawing(std::vector<Node> nodes, std::vector<Dart> darts,
                      std::vector<std::vector<int>> rotations,
                      std::vector<EdgeChain> edges);

// every dart in exactly one walk; walk successor = rot-next of twin
std::vector<std::vector<int>> trace_faces(const Drawing& d);

// true iff the planarization graph (vertices + crossings) is connected
bool is_connected_drawing(const Drawing& d);

// incremental construction: nodes + per-edge node routes; darts are created
// per route segment, rotations supplied afterwards in terms of those darts
struct MapBuilder {
  std::vector<Node> nodes;
  std::vector<Dart> darts;
  std::vector<std::vector<int>> rotations;
  std::vector<EdgeChain> edges;
  std::vector<std::vector<int>> routes;

  int add_node(NodeKind kind, std::string name = "");
  // route = [tail, crossing..., head]; returns edge index
  int add_edge(const std::vector<int>& route, std::string name = "");
  int fwd(int e, int i) const;  // dart route[i] -> route[i+1]
  int bwd(int e, int i) const;  // dart route[i+1] -> route[i]
  void set_rotation(int node, std::vector<int> order);
  Drawing build();
};

}  // namespace celldraw
