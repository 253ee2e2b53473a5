#include "celldraw/cells.hpp"

#include <algorithm>
#include <set>

namespace celldraw {

std::string canonical_word(const std::string& w) {
  if (w.empty()) throw Error(Err::InvalidWord, "empty corner word");
  std::string best;
  for (std::string s : {w, std::string(w.rbegin(), w.rend())}) {
    for (size_t i = 0; i < s.size(); ++i) {
      std::string rot = s.substr(i) + s.substr(0, i);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

int CellType::size() const { return static_cast<int>(word.size()) + vertices(); }
int CellType::vertices() const {
  return static_cast<int>(std::count(word.begin(), word.end(), 'V'));
}

namespace {

// all canonical cyclic classes with given word length and V-count
std::set<std::string> classes_for(int len, int vs) {
  std::set<std::string> out;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    if (__builtin_popcount(mask) != vs) continue;
    std::string w(len, 'X');
    for (int i = 0; i < len; ++i)
      if (mask & (1u << i)) w[i] = 'V';
    out.insert(canonical_word(w));
  }
  return out;
}

}  // namespace

CellType parse_type(const std::string& text) {
  if (text.empty()) throw Error(Err::InvalidWord, "empty cell type");
  size_t us = text.find('_');
  if (us != std::string::npos) {
    int s = 0, v = 0;
    try {
      s = std::stoi(text.substr(0, us));
      v = std::stoi(text.substr(us + 1));
    } catch (const std::exception&) {
      throw Error(Err::InvalidWord, "bad shorthand '" + text + "'");
    }
    int len = s - v;
    if (len < 1 || v < 0 || v > len || len > 20)
      throw Error(Err::InvalidWord, "no cell type with size " + std::to_string(s) + " and " +
                                        std::to_string(v) + " vertices");
    auto classes = classes_for(len, v);
    if (classes.empty())
      throw Error(Err::InvalidWord, "no cell type matches '" + text + "'");
    if (classes.size() > 1) {
      std::string all;
      for (const auto& c : classes) all += (all.empty() ? "" : ", ") + c;
      throw Error(Err::AmbiguousShorthand, "'" + text + "' matches " + all);
    }
    return CellType{*classes.begin()};
  }
  for (char c : text)
    if (c != 'V' && c != 'X')
      throw Error(Err::InvalidWord, "corner word may only contain V and X: '" + text + "'");
  return CellType{canonical_word(text)};
}

std::vector<std::string> small_type_classes(int max_size) {
  std::vector<std::string> out;
  for (int s = 2; s <= max_size; ++s)
    for (int v = 0; v <= s - 2; ++v)
      for (const std::string& w : classes_for(s - v, v)) out.push_back(w);
  return out;
}

std::string type_shorthand(const std::string& canonical) {
  int v = static_cast<int>(std::count(canonical.begin(), canonical.end(), 'V'));
  int s = static_cast<int>(canonical.size()) + v;
  auto classes = classes_for(static_cast<int>(canonical.size()), v);
  if (classes.size() != 1) return "";
  return std::to_string(s) + "_" + std::to_string(v);
}

int Census::count_ge(int size) const {
  int total = 0;
  for (auto [s, c] : by_size)
    if (s >= size) total += c;
  return total;
}

Census census(const Drawing& d) {
  if (!is_connected_drawing(d))
    throw Error(Err::DisconnectedDrawing, "census requires a connected drawing image");
  Census out;
  out.n = d.vertex_count;
  out.edge_count = static_cast<long>(d.edges.size());
  out.crossings = d.crossing_count;
  for (auto& walk : trace_faces(d)) {
    Cell c;
    c.walk = std::move(walk);
    std::string word;
    for (int dart : c.walk) {
      bool vert = d.nodes[d.darts[dart].node].kind == NodeKind::Vertex;
      word += vert ? 'V' : 'X';
      (vert ? c.v : c.x)++;
      c.e++;
      if (d.inner_segment(dart)) c.e_in++;
    }
    c.word = canonical_word(word);
    out.by_type[c.word]++;
    out.by_size[c.size()]++;
    out.cells.push_back(std::move(c));
  }
  long sv = 0, se = 0, sx = 0;
  for (const Cell& c : out.cells) sv += c.v, se += c.e, sx += c.x;
  if (sv != 2 * out.edge_count || se != 2 * d.segment_count() || sx != 4L * out.crossings)
    throw Error(Err::ValidationError, "census double-counting invariants violated");
  return out;
}

int count_type(const Census& c, const CellType& t) {
  auto it = c.by_type.find(t.word);
  return it == c.by_type.end() ? 0 : it->second;
}

}  // namespace celldraw
