#pragma once

#include <vector>

#include "trisph/errors.hpp"
#include "trisph/triangulation.hpp"

namespace trisph {

// A polyhedral 2-sphere: the boundary complex of a 3-polytope, faces given
// as vertex cycles of length >= 3 (the boundary of a simple polytope when
// every vertex degree is 3).  build() validates
//   * cycles have length >= 3 with no repeated vertex,
//   * every vertex 0..n-1 lies in some face and has degree >= 3,
//   * every edge lies in exactly two face cycles, traversed in opposite
//     directions once the cycles are consistently oriented,
//   * every vertex link is a single simple cycle,
//   * the graph is connected and V - E + F = 2.
// Faces are stored consistently oriented, each rotated to start at its
// smallest vertex, sorted; of the two global orientations the
// lexicographically smaller face list is kept, so equal inputs produce
// byte-equal values.  A Triangulation is accepted (all cycles length 3)
// and convertible losslessly.
class PolyhedralSphere {
 public:
  static PolyhedralSphere build(std::vector<std::vector<int>> face_cycles);
  static PolyhedralSphere from_triangulation(const Triangulation& t);

  int vertex_count() const { return n_; }
  int edge_count() const { return e_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  bool all_triangles() const;
  Triangulation to_triangulation() const;  // requires all_triangles()

 private:
  PolyhedralSphere() = default;

  int n_ = 0;
  int e_ = 0;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> rot_;
};

// Dual sphere: one vertex per face of p, one face per vertex of p (the
// cycle of faces around that vertex).  dual(dual(p)) is isomorphic to p.
PolyhedralSphere dual(const PolyhedralSphere& p);
PolyhedralSphere dual(const Triangulation& t);

}  // namespace trisph
