#pragma once

#include <gmpxx.h>

#include <string>

namespace qsched {

/// Exact rational number. All demands, durations and LP computations use this
/// type; binary floating point never enters any verdict.
using Rat = mpq_class;

/// Parses "p/q", an integer string, or a decimal string ("0.25") into an exact
/// rational. Throws ParseError on malformed input or a zero denominator.
Rat rat_from_string(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

inline Rat rat_int(long v) { return Rat(v); }

/// Convenience for literals in tests and fixtures: frac(5, 4) == 5/4.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qsched
