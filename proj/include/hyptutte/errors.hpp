#pragma once

#include <stdexcept>
#include <string>

namespace hyptutte {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A tangent vector with norm below the degeneracy threshold was passed
// where a direction is required (signals a degenerate edge).
struct ZeroVectorError : Error {
  using Error::Error;
};

// Projection produced a matrix that swaps the hyperboloid sheets.
struct NotOrthochronousError : Error {
  using Error::Error;
};

struct GenusTooSmallError : Error {
  using Error::Error;
};

struct DegenerateEdgeError : Error {
  using Error::Error;
};

struct DegenerateFaceError : Error {
  using Error::Error;
};

// Mean value coordinates requested on a mapping that is not an embedding.
struct NotEmbeddedError : Error {
  using Error::Error;
};

// Two mappings with different deck labels (different homotopy classes).
struct LabelMismatchError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace hyptutte
