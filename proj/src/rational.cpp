#include "celldraw/rational.hpp"

#include "celldraw/error.hpp"

namespace celldraw {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw Error(Err::ParseError, "empty rational");
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits(num) || !digits(den))
    throw Error(Err::ParseError, "bad rational '" + s + "'");
  Rat r;
  try {
    r = Rat(mpz_class(num), mpz_class(den));
  } catch (const std::exception&) {
    throw Error(Err::ParseError, "bad rational '" + s + "'");
  }
  if (r.get_den() == 0) throw Error(Err::ParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

const char* err_name(Err e) {
  switch (e) {
    case Err::NonSphere: return "NonSphere";
    case Err::TransversalityViolation: return "TransversalityViolation";
    case Err::SelfCrossing: return "SelfCrossing";
    case Err::LoopEdge: return "LoopEdge";
    case Err::DanglingDart: return "DanglingDart";
    case Err::OverlappingSegments: return "OverlappingSegments";
    case Err::CrossingAtVertex: return "CrossingAtVertex";
    case Err::ConcurrentCrossing: return "ConcurrentCrossing";
    case Err::TangentialContact: return "TangentialContact";
    case Err::DisconnectedDrawing: return "DisconnectedDrawing";
    case Err::NoEdges: return "NoEdges";
    case Err::AmbiguousShorthand: return "AmbiguousShorthand";
    case Err::InvalidWord: return "InvalidWord";
    case Err::ParameterOutOfRange: return "ParameterOutOfRange";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::DegenerateInput: return "DegenerateInput";
    case Err::ParseError: return "ParseError";
    case Err::SchemaError: return "SchemaError";
    case Err::ValidationError: return "ValidationError";
    case Err::IoError: return "IoError";
    case Err::LayoutFailure: return "LayoutFailure";
  }
  return "Error";
}

}  // namespace celldraw
