#pragma once

#include <iosfwd>
#include <optional>
#include <variant>

#include "trisph/polyhedral.hpp"
#include "trisph/triangulation.hpp"

namespace trisph {

// Polytope text format.  Line oriented, whitespace separated, '#' starts a
// comment anywhere on a line:
//   n <vertex-count>
//   f <v1> <v2> <v3>        triangulation face
//   c <v1> <v2> ... <vk>    polyhedral face cycle (k >= 3)
// A file uses either f-lines or c-lines, never both.  The declared vertex
// count must equal 1 + max vertex id used.
struct PolytopeFile {
  std::variant<Triangulation, PolyhedralSphere> value;

  bool is_triangulation() const {
    return std::holds_alternative<Triangulation>(value);
  }
  const Triangulation& triangulation() const {
    return std::get<Triangulation>(value);
  }
  const PolyhedralSphere& polyhedral() const {
    return std::get<PolyhedralSphere>(value);
  }
};

PolytopeFile read_polytope(std::istream& in);

// Reads either kind and converts all-triangle polyhedra; throws
// MalformedFace when a genuine polyhedral sphere cannot be a triangulation.
Triangulation read_triangulation(std::istream& in);

void write_polytope(std::ostream& out, const Triangulation& t);
void write_polytope(std::ostream& out, const PolyhedralSphere& p);

}  // namespace trisph
