#pragma once
#include <stdexcept>
#include <string>

namespace celldraw {

enum class Err {
  NonSphere,
  TransversalityViolation,
  SelfCrossing,
  LoopEdge,
  DanglingDart,
  OverlappingSegments,
  CrossingAtVertex,
  ConcurrentCrossing,
  TangentialContact,
  DisconnectedDrawing,
  NoEdges,
  AmbiguousShorthand,
  InvalidWord,
  ParameterOutOfRange,
  PreconditionFailed,
  DegenerateInput,
  ParseError,
  SchemaError,
  ValidationError,
  IoError,
  LayoutFailure,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

}  // namespace celldraw
