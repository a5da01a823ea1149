#pragma once

#include <vector>

#include "trisph/betti.hpp"
#include "trisph/triangulation.hpp"

namespace trisph {

// Characteristic 0 is emulated over this prime (2^31 - 1); a disagreement
// with characteristic 2 would signal torsion in an induced subcomplex,
// which cannot happen for these complexes, so it is raised as a hard
// internal error rather than a domain error.
inline constexpr long long kCharZeroPrime = 2147483647;

// Rows i = 0..n-3, columns j = 0..n.
struct GradedBettiTable {
  int n = 0;
  std::vector<std::vector<long long>> beta;

  bool operator==(const GradedBettiTable&) const = default;
  long long at(int i, int j) const { return beta[i][j]; }
};

// beta_{i,j} = sum over j-subsets W of dim H~_{j-i-1}(T|W; F_char), the
// reduced simplicial homology of the induced subcomplex, computed from
// boundary matrix ranks.  characteristic must be 2 or kCharZeroPrime.
// Cost is Theta(2^n) small rank computations, hence the cap.
GradedBettiTable hochster_table(const Triangulation& t, long long characteristic,
                                int cap = 9);

long long hochster_beta(const Triangulation& t, int i, int j,
                        long long characteristic, int cap = 9);

// Both characteristics; throws std::logic_error on any mismatch.
GradedBettiTable hochster_table_checked(const Triangulation& t, int cap = 9);

// The full table from one betti_sweep pass plus duality:
//   beta_{0,0} = 1, beta_{n-3,n} = 1,
//   beta_{i-1,i} = b_i,  beta_{i-2,i} = b_{n-i},  all else 0.
// Agrees entrywise with hochster_table in both characteristics.
GradedBettiTable graded_table(const Triangulation& t);

}  // namespace trisph
