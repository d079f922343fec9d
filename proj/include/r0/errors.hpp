#pragma once

#include <stdexcept>
#include <string>

namespace r0 {

// Input file is syntactically malformed. CLI maps this to exit 2.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Input is well-formed but internally inconsistent (e.g. a declared order
// section that contradicts the order derived from the arrow table).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carrier too large for an exhaustive subset scan. CLI maps this to exit 3.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold. CLI maps this to exit 1
// for constructions.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace r0
