#pragma once

#include <stdexcept>
#include <string>

namespace koethe {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A directed cycle where an acyclic quiver is required.
struct cyclic_quiver_error : error {
  using error::error;
};

// Operation called on a quiver in the wrong mode (hereditary vs general).
struct mode_error : error {
  using error::error;
};

// Malformed quiver data: duplicate vertices, parallel arrows, loops in
// hereditary mode, arrows touching unknown vertices.
struct invalid_quiver_error : error {
  using error::error;
};

// Bad dimension-sequence data (too short, non-positive entries, or a
// sequence that fails the defining recurrences where validity is required).
struct sequence_error : error {
  using error::error;
};

// Reflection requested at a vertex that is not a sink/source, or at an
// unknown vertex.
struct reflect_error : error {
  using error::error;
};

// An iteration cap was hit; reported instead of returning a wrong answer.
struct cap_exceeded_error : error {
  using error::error;
};

// Enumeration requested on a diagram outside the representation-finite
// catalogue.
struct not_rep_finite_error : error {
  using error::error;
};

// Problems with the symmetrized bilinear form: no symmetrizer exists, a
// degenerate vertex, or a root-orbit request on a non-Dynkin diagram.
struct form_error : error {
  using error::error;
};

// Matrix-representation engine misuse: non-trivial bimodule labels,
// incompatible subrepresentation data, or an invalid arm.
struct rep_error : error {
  using error::error;
};

// Text/JSON input rejected; carries the 1-based input line when known.
struct parse_error : error {
  int line;
  parse_error(int line_, const std::string& what)
      : error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace koethe
