#pragma once
#include <iosfwd>
#include <string>
#include <variant>

#include "celldraw/geometry.hpp"
#include "celldraw/map.hpp"

namespace celldraw {

using Document = std::variant<Drawing, GeometricDrawing>;

// JSON with a "celldraw-map/1" or "celldraw-geo/1" format tag; the result is
// fully validated (build_drawing resp. geometric validity incl. contacts)
Document load_document(std::istream& in);
Document load_document_file(const std::string& path);

// canonical text: sorted keys, arrays sorted by id, rotations rotated to the
// smallest dart id, rationals reduced; save(load(save(x))) is byte-identical
std::string save_map(const Drawing& d);
std::string save_geo(const GeometricDrawing& g);
std::string save_document(const Document& doc);
void save_document_file(const Document& doc, const std::string& path);

}  // namespace celldraw
