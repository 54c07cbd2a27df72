#ifndef BGRID_ERRORS_HPP
#define BGRID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bgrid {

// Base class for everything this library throws on invalid input.
// Internal logic errors use assert, not Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element whose measure is below the relative degeneracy threshold
// (area <= eps*L^2 in 2-D, |volume| <= eps*L^3 in 3-D, L = longest edge).
struct DegenerateElement : Error {
  using Error::Error;
};

// Element references a vertex index outside [0, n_points).
struct OutOfRangeIndex : Error {
  using Error::Error;
};

// An edge (2-D) or face (3-D) is shared by more than two elements.
struct NonConforming : Error {
  using Error::Error;
};

// Two elements with the same vertex set.
struct DuplicateElement : Error {
  using Error::Error;
};

// Bad generator or subcommand parameter.
struct InvalidParam : Error {
  using Error::Error;
};

// Output requested for a mesh with no elements.
struct EmptyMesh : Error {
  using Error::Error;
};

// Malformed node/ele text. Carries 1-based line and column of the offence.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string& what_)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

// Node and ele files disagree about the index base (0 vs 1), or node ids
// are not consecutive from the detected base.
struct IndexBaseMismatch : Error {
  using Error::Error;
};

}  // namespace bgrid

#endif
