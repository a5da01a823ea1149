#pragma once

#include <map>
#include <vector>

#include "trisph/triangulation.hpp"

namespace trisph {

// A k-belt: an induced (chordless) k-cycle whose removal disconnects the
// complement.  vertices holds the cycle normalized to its lexicographically
// least rotation/reflection (smallest vertex first, then the smaller of its
// two cycle neighbors).
struct Belt {
  int k = 0;
  std::vector<int> vertices;

  bool operator==(const Belt&) const = default;
  auto operator<=>(const Belt&) const = default;
};

// All k-belts, sorted by normalized vertex sequence.  Pre: 3 <= k <= n-2.
// k = 3 reduces to the non-facial triangles (a triangle of the graph is
// either a face or separates the sphere); k = 4 is found by opposite-pair
// scans; larger k by chordless-cycle DFS.  Separation tests use bitmask
// flooding, so k >= 4 needs n <= 64.
std::vector<Belt> find_belts(const Triangulation& t, int k);

// True iff the graph has no non-facial triangle (equivalently, no 3-belt),
// i.e. the sphere is not a connected sum.  Works for any n.
bool is_irreducible(const Triangulation& t);

// k -> number of k-belts for every k in [3, n-2].
std::map<int, long long> belt_profile(const Triangulation& t);

namespace detail {
// Non-facial triangles as sorted triples; any n.
std::vector<std::array<int, 3>> nonfacial_triangles(const Triangulation& t);
// Belt counts for k in {3,4} without the find_belts precondition (returns 0
// where no such belt can exist); used by census records.
long long count_belts_3(const Triangulation& t);
long long count_belts_4(const Triangulation& t);
}  // namespace detail

}  // namespace trisph
