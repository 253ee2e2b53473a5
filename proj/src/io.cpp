#include "celldraw/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace celldraw {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& msg) { throw Error(Err::SchemaError, msg); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where + " is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where + " is missing '" + key + "'");
  return *it;
}

std::string str_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema(where + "." + key + " must be a string");
  return v.get<std::string>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> keys,
                    const std::string& where) {
  for (auto& [k, unused] : obj.items())
    if (std::find_if(keys.begin(), keys.end(), [&](const char* s) { return k == s; }) == keys.end())
      schema(where + " has unknown field '" + k + "'");
}

Rat rat_field(const json& v, const std::string& where) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return rat(v.get<long>());
  schema(where + " must be a rational string");
}

Pt pt_field(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) schema(where + " must be [x, y]");
  return {rat_field(v[0], where + "[0]"), rat_field(v[1], where + "[1]")};
}

int resolve(const std::map<std::string, int>& ids, const json& v, const std::string& where,
            const std::string& kind_name) {
  if (!v.is_string()) schema(where + " must be a " + kind_name + " id string");
  auto it = ids.find(v.get<std::string>());
  if (it == ids.end()) schema(where + " references unknown " + kind_name + " '" +
                              v.get<std::string>() + "'");
  return it->second;
}

Drawing load_map(const json& doc) {
  reject_unknown(doc, {"format", "nodes", "darts", "rotations", "edges"}, "document");
  const json& jnodes = field(doc, "nodes", "document");
  const json& jdarts = field(doc, "darts", "document");
  const json& jrot = field(doc, "rotations", "document");
  const json& jedges = field(doc, "edges", "document");
  if (!jnodes.is_array() || !jdarts.is_array() || !jedges.is_array() || !jrot.is_object())
    schema("nodes/darts/edges must be arrays and rotations an object");

  std::vector<Node> nodes;
  std::map<std::string, int> node_ids;
  for (const json& jn : jnodes) {
    reject_unknown(jn, {"id", "kind"}, "node");
    std::string id = str_field(jn, "id", "node");
    std::string kind = str_field(jn, "kind", "node " + id);
    if (kind != "vertex" && kind != "crossing")
      schema("node " + id + " kind must be vertex or crossing");
    if (!node_ids.emplace(id, static_cast<int>(nodes.size())).second)
      schema("duplicate node id '" + id + "'");
    nodes.push_back({id, kind == "vertex" ? NodeKind::Vertex : NodeKind::Crossing});
  }

  std::vector<Dart> darts;
  std::map<std::string, int> dart_ids;
  std::vector<std::string> twin_names;
  for (const json& jd : jdarts) {
    reject_unknown(jd, {"id", "node", "twin"}, "dart");
    std::string id = str_field(jd, "id", "dart");
    if (!dart_ids.emplace(id, static_cast<int>(darts.size())).second)
      schema("duplicate dart id '" + id + "'");
    Dart d;
    d.name = id;
    d.node = resolve(node_ids, field(jd, "node", "dart " + id), "dart " + id + ".node", "node");
    twin_names.push_back(str_field(jd, "twin", "dart " + id));
    darts.push_back(d);
  }
  for (size_t i = 0; i < darts.size(); ++i) {
    auto it = dart_ids.find(twin_names[i]);
    if (it == dart_ids.end())
      schema("dart " + darts[i].name + " twin references unknown dart '" + twin_names[i] + "'");
    darts[i].twin = it->second;
  }

  std::vector<std::vector<int>> rotations(nodes.size());
  for (auto& [nid, jlist] : jrot.items()) {
    auto it = node_ids.find(nid);
    if (it == node_ids.end()) schema("rotations key '" + nid + "' is not a node id");
    if (!jlist.is_array()) schema("rotation of " + nid + " must be a dart id list");
    for (const json& jd : jlist)
      rotations[it->second].push_back(resolve(dart_ids, jd, "rotation of " + nid, "dart"));
  }

  std::vector<EdgeChain> edges;
  std::set<std::string> edge_ids;
  for (const json& je : jedges) {
    reject_unknown(je, {"id", "tail", "head", "chain"}, "edge");
    EdgeChain e;
    e.name = str_field(je, "id", "edge");
    if (!edge_ids.insert(e.name).second) schema("duplicate edge id '" + e.name + "'");
    e.tail = resolve(node_ids, field(je, "tail", "edge " + e.name), "edge " + e.name + ".tail",
                     "node");
    e.head = resolve(node_ids, field(je, "head", "edge " + e.name), "edge " + e.name + ".head",
                     "node");
    const json& jchain = field(je, "chain", "edge " + e.name);
    if (!jchain.is_array()) schema("edge " + e.name + ".chain must be a dart id list");
    for (const json& jd : jchain)
      e.chain.push_back(resolve(dart_ids, jd, "edge " + e.name + ".chain", "dart"));
    edges.push_back(std::move(e));
  }
  return build_drawing(std::move(nodes), std::move(darts), std::move(rotations), std::move(edges));
}

GeometricDrawing load_geo(const json& doc) {
  reject_unknown(doc, {"format", "vertices", "edges"}, "document");
  const json& jverts = field(doc, "vertices", "document");
  const json& jedges = field(doc, "edges", "document");
  if (!jverts.is_array() || !jedges.is_array()) schema("vertices and edges must be arrays");

  GeometricDrawing g;
  std::map<std::string, int> vertex_ids;
  for (const json& jv : jverts) {
    reject_unknown(jv, {"id", "pos"}, "vertex");
    std::string id = str_field(jv, "id", "vertex");
    if (!vertex_ids.emplace(id, static_cast<int>(g.vertices.size())).second)
      schema("duplicate vertex id '" + id + "'");
    g.vertices.push_back({id, pt_field(field(jv, "pos", "vertex " + id), "vertex " + id + ".pos")});
  }
  std::set<std::string> edge_ids;
  for (const json& je : jedges) {
    reject_unknown(je, {"id", "tail", "head", "bends"}, "edge");
    GeoEdge e;
    e.name = str_field(je, "id", "edge");
    if (!edge_ids.insert(e.name).second) schema("duplicate edge id '" + e.name + "'");
    e.tail = resolve(vertex_ids, field(je, "tail", "edge " + e.name), "edge " + e.name + ".tail",
                     "vertex");
    e.head = resolve(vertex_ids, field(je, "head", "edge " + e.name), "edge " + e.name + ".head",
                     "vertex");
    if (je.contains("bends")) {
      const json& jb = je["bends"];
      if (!jb.is_array()) schema("edge " + e.name + ".bends must be a point list");
      for (const json& jp : jb) e.bends.push_back(pt_field(jp, "edge " + e.name + ".bends"));
    }
    g.edges.push_back(std::move(e));
  }
  (void)intersect_all(g);  // full validation including contact classification
  return g;
}

// stable ids for save: keep unique non-empty names, synthesize the rest
std::vector<std::string> make_ids(size_t count, const char* prefix,
                                  const std::function<std::string(size_t)>& name_of) {
  std::vector<std::string> ids(count);
  std::set<std::string> used;
  for (size_t i = 0; i < count; ++i) {
    std::string n = name_of(i);
    if (!n.empty() && used.insert(n).second) ids[i] = n;
  }
  for (size_t i = 0; i < count; ++i) {
    if (!ids[i].empty()) continue;
    std::string n = prefix + std::to_string(i);
    while (!used.insert(n).second) n += "_";
    ids[i] = n;
  }
  return ids;
}

json pt_json(const Pt& p) { return json::array({rat_str(p.x), rat_str(p.y)}); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string save_map(const Drawing& d) {
  auto node_ids = make_ids(d.nodes.size(), "n", [&](size_t i) { return d.nodes[i].name; });
  auto dart_ids = make_ids(d.darts.size(), "d", [&](size_t i) { return d.darts[i].name; });
  auto edge_ids = make_ids(d.edges.size(), "e", [&](size_t i) { return d.edges[i].name; });

  json jnodes = json::array();
  std::vector<int> order(d.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return node_ids[a] < node_ids[b]; });
  for (int i : order)
    jnodes.push_back({{"id", node_ids[i]},
                      {"kind", d.nodes[i].kind == NodeKind::Vertex ? "vertex" : "crossing"}});

  json jdarts = json::array();
  order.assign(d.darts.size(), 0);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dart_ids[a] < dart_ids[b]; });
  for (int i : order)
    jdarts.push_back({{"id", dart_ids[i]},
                      {"node", node_ids[d.darts[i].node]},
                      {"twin", dart_ids[d.darts[i].twin]}});

  json jrot = json::object();
  for (size_t v = 0; v < d.nodes.size(); ++v) {
    const auto& rot = d.rotations[v];
    size_t best = 0;
    for (size_t i = 1; i < rot.size(); ++i)
      if (dart_ids[rot[i]] < dart_ids[rot[best]]) best = i;
    json lst = json::array();
    for (size_t i = 0; i < rot.size(); ++i) lst.push_back(dart_ids[rot[(best + i) % rot.size()]]);
    jrot[node_ids[v]] = std::move(lst);
  }

  json jedges = json::array();
  order.assign(d.edges.size(), 0);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return edge_ids[a] < edge_ids[b]; });
  for (int i : order) {
    json chain = json::array();
    for (int dart : d.edges[i].chain) chain.push_back(dart_ids[dart]);
    jedges.push_back({{"id", edge_ids[i]},
                      {"tail", node_ids[d.edges[i].tail]},
                      {"head", node_ids[d.edges[i].head]},
                      {"chain", std::move(chain)}});
  }

  return dump({{"format", "celldraw-map/1"},
               {"nodes", std::move(jnodes)},
               {"darts", std::move(jdarts)},
               {"rotations", std::move(jrot)},
               {"edges", std::move(jedges)}});
}

std::string save_geo(const GeometricDrawing& g) {
  auto vertex_ids = make_ids(g.vertices.size(), "v", [&](size_t i) { return g.vertices[i].name; });
  auto edge_ids = make_ids(g.edges.size(), "e", [&](size_t i) { return g.edges[i].name; });

  json jverts = json::array();
  std::vector<int> order(g.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return vertex_ids[a] < vertex_ids[b]; });
  for (int i : order) jverts.push_back({{"id", vertex_ids[i]}, {"pos", pt_json(g.vertices[i].pos)}});

  json jedges = json::array();
  order.assign(g.edges.size(), 0);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return edge_ids[a] < edge_ids[b]; });
  for (int i : order) {
    json bends = json::array();
    for (const Pt& b : g.edges[i].bends) bends.push_back(pt_json(b));
    jedges.push_back({{"id", edge_ids[i]},
                      {"tail", vertex_ids[g.edges[i].tail]},
                      {"head", vertex_ids[g.edges[i].head]},
                      {"bends", std::move(bends)}});
  }
  return dump({{"format", "celldraw-geo/1"},
               {"vertices", std::move(jverts)},
               {"edges", std::move(jedges)}});
}

std::string save_document(const Document& doc) {
  if (std::holds_alternative<Drawing>(doc)) return save_map(std::get<Drawing>(doc));
  return save_geo(std::get<GeometricDrawing>(doc));
}

Document load_document(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Err::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
    schema("document must carry a string 'format' tag");
  std::string fmt = doc["format"].get<std::string>();
  if (fmt == "celldraw-map/1") return load_map(doc);
  if (fmt == "celldraw-geo/1") return load_geo(doc);
  schema("unknown format '" + fmt + "'");
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::IoError, "cannot read " + path);
  return load_document(in);
}

void save_document_file(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::IoError, "cannot write " + path);
  out << save_document(doc);
  if (!out) throw Error(Err::IoError, "write failed for " + path);
}

}  // namespace celldraw
