#pragma once

#include <array>
#include <utility>
#include <vector>

#include "trisph/belts.hpp"
#include "trisph/canonical.hpp"
#include "trisph/triangulation.hpp"

namespace trisph {

// One way to glue two triangulations along facets: remove face1 from the
// first and face2 from the second, then identify the vertices of face2
// with those of face1 under one of the 6 bijections.  matching indexes the
// permutations of face2's sorted vertices in lexicographic order, i.e.
// matching 0 maps i-th smallest to i-th smallest.
struct Gluing {
  std::array<int, 3> face1{};
  std::array<int, 3> face2{};
  int matching = 0;
};

// Connected sum P1 # P2 along g.  The result keeps P1's labels, reuses
// face1's vertices for the identified triple and appends the rest of P2's
// vertices in ascending order; n = n1 + n2 - 3.  The identified triple is
// always a 3-belt of the result.  Throws InvalidGluing.
Triangulation connected_sum(const Triangulation& p1, const Triangulation& p2,
                            const Gluing& g);

// Every isomorphism class obtainable by summing P1 and P2 (all face pairs,
// all 6 matchings, deduplicated by canonical code), sorted by code.
std::vector<Triangulation> all_connected_sums(const Triangulation& p1,
                                              const Triangulation& p2);

// Cuts T along a 3-belt into the two sides, each closed off by the belt
// triangle (kept as a face).  Vertices are renumbered densely preserving
// ascending order, so the belt appears in both parts in the same relative
// order and connected_sum with identity matching restores T.  Throws
// NotABelt.
std::pair<Triangulation, Triangulation> split(const Triangulation& t,
                                              const Belt& belt3);

// Full decomposition into irreducible summands: repeatedly split at the
// lexicographically least 3-belt.  splits is the pre-order record of the
// belts used (in the labels of the sub-triangulation being split); leaves
// are the canonical codes of the irreducible parts, as a sorted multiset.
struct DecompositionTree {
  struct SplitRecord {
    std::array<int, 3> belt{};
  };
  std::vector<SplitRecord> splits;
  std::vector<CanonicalCode> leaves;
};

DecompositionTree decompose(const Triangulation& t);

}  // namespace trisph
