#pragma once

#include <string>
#include <vector>

#include "trisph/polyhedral.hpp"
#include "trisph/triangulation.hpp"

namespace trisph {

// Fixed vertex numberings (documented so outputs are reproducible):
//   tetrahedron    0..3, every triple a face
//   octahedron     equator cycle 0 1 2 3, apexes 4 and 5
//   icosahedron    0 north pole, 1..5 upper ring, 6..10 lower ring
//                  (6+i below edge {1+i, 1+(i+1)%5}), 11 south pole
//   cube           dual of the octahedron, vertices in its face order
//   dodecahedron   dual of the icosahedron, vertices in its face order
Triangulation tetrahedron();
Triangulation octahedron();
Triangulation icosahedron();
PolyhedralSphere cube();
PolyhedralSphere dodecahedron();

// Bipyramid B_n over an (n-2)-cycle: ring 0..n-3, apexes n-2 and n-1.
// Pre: n >= 5.  B_5 is the repeated tetrahedron sum, B_6 the octahedron.
Triangulation bipyramid(int n);

// k-gonal prism: bottom cycle 0..k-1, top cycle k..2k-1.  Pre: k >= 3.
PolyhedralSphere prism(int k);

// Prism with the top edge {k, k+1} cut: the cut slips a new quadrilateral
// between that edge and the side below it, splitting both vertical edges
// with new degree-3 vertices 2k (under k) and 2k+1 (under k+1).
// V = 2k+2, F = k+3.  Pre: k >= 3.
PolyhedralSphere edge_cut_prism(int k);

// Near-bipyramid: B_{n-1} on vertices 0..n-2 (ring 0..n-4, apexes n-3 and
// n-2) with the apex-to-ring edge {n-3, 0} removed and a new degree-4
// vertex z = n-1 inserted adjacent to n-3, 0 and 0's ring neighbors 1 and
// n-4.  All apex-edge choices give isomorphic results.  Isomorphic to
// dual(edge_cut_prism(n-3)).  Pre: n >= 8.
Triangulation semi_bipyramid(int n);

// Coning every face at a new center vertex: n' = n + F.  Centers are
// numbered n + (face index).
Triangulation subdivide_first(const PolyhedralSphere& p);

// Full barycentric-style subdivision inserting edge midpoints and face
// centers: n' = n + E + F.  Midpoint of the e-th edge (edges as sorted
// pairs in lexicographic order) is n + e; center of face f is n + E + f.
Triangulation subdivide_second(const PolyhedralSphere& p);

Triangulation subdivide_first(const Triangulation& t);
Triangulation subdivide_second(const Triangulation& t);

// Splits vertex v along two rotation positions 0 <= i < j < deg(v): v
// becomes v' = v (keeping rotation arc rot(v)[i..j]) and v'' = n (the
// complementary arc); both stay adjacent to rot(v)[i], rot(v)[j] and to
// each other, adding faces {v', v'', rot(v)[i]} and {v', v'', rot(v)[j]}.
// Inverse of an edge contraction.  Throws InvalidSplit.
Triangulation vertex_split(const Triangulation& t, int v, int i, int j);

// The pairs of summands whose connected sums exhaust the rigid reducible
// spheres: first element regular (T4, O6, icosahedron), second ranges over
// the regulars, first/second subdivisions of the cube and dodecahedron,
// and bipyramids B_7..B_max.  Unordered pairs are listed once.
struct GeneratorPair {
  std::string name1, name2;
  Triangulation p1, p2;
};
std::vector<GeneratorPair> necessary_family(int max_bipyramid);

}  // namespace trisph
