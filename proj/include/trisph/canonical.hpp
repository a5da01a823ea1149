#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "trisph/triangulation.hpp"

namespace trisph {

class PolyhedralSphere;

// Canonical form of an embedded sphere map: the lexicographic minimum, over
// all directed starting edges and both global orientations, of a
// breadth-first traversal code of the rotation system.  Reflections count
// as isomorphisms.  Layout: byte 0 is n, then for each vertex in discovery
// order its full rotation as (label+1) bytes starting at the entry
// neighbor, terminated by 0.  Codes embed n, so codes of complexes with
// different vertex counts never collide.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;

  int vertex_count() const {
    return bytes.empty() ? 0 : static_cast<unsigned char>(bytes[0]);
  }
  std::string hex() const;
  static CanonicalCode from_hex(const std::string& h);
};

namespace detail {
// Code of an arbitrary rotation system (n <= 255, connected).
CanonicalCode map_code(int n, const std::vector<std::vector<int>>& rot);
}  // namespace detail

CanonicalCode canonical_code(const Triangulation& t);
CanonicalCode canonical_code(const PolyhedralSphere& p);

bool are_isomorphic(const Triangulation& a, const Triangulation& b);
bool are_isomorphic(const PolyhedralSphere& a, const PolyhedralSphere& b);

}  // namespace trisph
