#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trisph/errors.hpp"

namespace trisph {

// A triangulated 2-sphere on dense vertices 0..n-1 (the boundary complex of
// a simplicial 3-polytope).  Values are immutable: the only way to obtain
// one is through build(), which validates
//   * faces are distinct triples of distinct vertex ids,
//   * every vertex 0..n-1 (n = 1 + max id) lies in some face,
//   * every edge lies in exactly two faces,
//   * every vertex link is a single simple cycle,
//   * the adjacency graph is connected,
//   * |F| = 2n - 4 and |E| = 3n - 6.
// For n >= 4 these conditions force a triangulated 2-sphere.  A consistent
// orientation is derived once at construction and cached as a rotation
// system (cyclic neighbor order around each vertex).
class Triangulation {
 public:
  static Triangulation build(std::vector<std::array<int, 3>> faces);

  int vertex_count() const { return n_; }
  int edge_count() const { return 3 * n_ - 6; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  // Sorted triples, list sorted lexicographically.
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }

  // Neighbors of v in ascending order.
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }

  // Neighbors of v in cyclic order under the cached orientation.
  const std::vector<int>& rotation(int v) const { return rot_[v]; }

  int degree(int v) const { return static_cast<int>(nbr_[v].size()); }
  bool has_edge(int u, int v) const;
  bool has_face(int a, int b, int c) const;

  // Row v = bitmask of neighbors(v).  Only available for n <= 64; kernels
  // that need it throw CapExceeded on larger complexes.
  const std::vector<std::uint64_t>& adjacency_masks() const;

 private:
  Triangulation() = default;

  int n_ = 0;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::uint64_t> adj_mask_;  // empty when n > 64
};

// Number of connected components of the subgraph induced on W.
// Pre: W lists distinct vertices of T.  cc(empty) = 0.
int induced_component_count(const Triangulation& t, std::span<const int> w);

// Sorted-descending vertex degrees of a face.  Throws FaceNotPresent.
std::array<int, 3> face_type(const Triangulation& t, std::array<int, 3> face);

enum class SymmetryClass {
  kRegular,                   // face-transitive with all degrees equal
  kFaceTransitiveNotRegular,  // one face type, several degrees
  kNotFaceTransitive,
};

const char* symmetry_class_name(SymmetryClass c);

// Classifies by the multiset of face types (degree profile per face).
SymmetryClass symmetry_class(const Triangulation& t);

}  // namespace trisph
