#pragma once
#include <gmpxx.h>

#include <string>

namespace celldraw {

// exact arbitrary-precision rational; no floating point anywhere in the pipeline
using Rat = mpq_class;

// accepts "p/q" or a decimal integer string; result is reduced, denominator > 0
Rat rat_parse(const std::string& s);

// reduced form: "p/q", or just "p" when the denominator is 1
std::string rat_str(const Rat& r);

inline Rat rat(long p, long q = 1) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace celldraw
