#pragma once
#include <map>
#include <string>
#include <vector>

#include "celldraw/map.hpp"

namespace celldraw {

// one face of the planarization with its boundary counts (all with multiplicity)
struct Cell {
  std::vector<int> walk;  // darts; corner i sits at the origin of walk[i]
  int v = 0;              // vertex corners
  int e = 0;              // segment traversals (= walk length)
  int x = 0;              // crossing corners
  int e_in = 0;           // traversals of inner segments (crossing-to-crossing)
  std::string word;       // canonical corner word over {V, X}
  int size() const { return e + v; }
};

// canonical cyclic corner word: lexicographic minimum over rotations and reversal
std::string canonical_word(const std::string& w);

struct CellType {
  std::string word;  // canonical
  int size() const;
  int vertices() const;
  bool operator==(const CellType&) const = default;
};

// corner word ("VXX") or shorthand ("4_1"); shorthand must be unambiguous
CellType parse_type(const std::string& text);
// "s_v" when that shorthand maps back uniquely to this type, else ""
std::string type_shorthand(const std::string& canonical);
// canonical words of every realizable type with size <= max_size (word length >= 2)
std::vector<std::string> small_type_classes(int max_size);

struct Census {
  std::vector<Cell> cells;
  std::map<std::string, int> by_type;  // canonical word -> count
  std::map<int, int> by_size;
  int n = 0;          // graph vertices
  long edge_count = 0;
  int crossings = 0;
  int count_ge(int size) const;  // |C_{>=size}|
};

// requires a connected drawing image (cell types are undefined otherwise)
Census census(const Drawing& d);

int count_type(const Census& c, const CellType& t);

}  // namespace celldraw
