#pragma once

#include <span>
#include <string>
#include <vector>

#include "trisph/triangulation.hpp"

namespace trisph {

// Special graded Betti numbers b_0..b_n of a triangulation, where
//   b_k = sum over all k-subsets W of (components(T|W) - 1).
// The empty subset contributes b_0 = -1 by this convention (0 components,
// minus one); it is the one negative entry and is never mixed with the
// graded table's beta_{0,0} = 1.  Everything is exact integer arithmetic.
struct BettiVector {
  int n = 0;
  std::vector<long long> b;  // size n + 1

  bool operator==(const BettiVector&) const = default;
};

// "v0,v1,...,vn" (CLI prints it after a "b: " prefix).
std::string betti_text(const BettiVector& v);
BettiVector betti_from_text(int n, const std::string& text);

struct SweepOptions {
  int cap = 24;     // refuse larger n (cost is Theta(2^n * n))
  int threads = 1;  // mask range is partitioned; results are bit-identical
};

// Full b-vector via one pass over all 2^n vertex subsets with bitmask
// component flooding.
BettiVector betti_sweep(const Triangulation& t, const SweepOptions& opt = {});

// Independent oracle for one k: enumerates k-subsets and counts components
// with union-find.  Deliberately shares no code with betti_sweep.
long long betti_bruteforce(const Triangulation& t, int k);

// Exact binomial coefficient; 0 when k < 0 or k > n; requires 0 <= n <= 64
// (all values fit in long long there).
long long binomial(int n, int k);

// Closed form for bipyramids:
//   b_k(B_n) = (n-2)(k-1)/(n-2-k) * C(n-4,k) + [k == 2]   for k <= n-3.
// Pre: n >= 5, 0 <= k <= n-3.  The division is always exact; a non
// integral value would be an internal error.
long long bipyramid_b(int n, int k);

// b_k of a connected sum from the summands' vectors alone:
//   b_k = sum_i (b_i(P1) C(n2-d, k-i) + b_i(P2) C(n1-d, k-i))
//         + C(n1+n2-2d, k),          d = 3 for spheres.
long long connected_sum_b(const BettiVector& b1, const BettiVector& b2, int d,
                          int k);

// b_{n-4} of a sum of irreducible summands from their top values:
//   sum_i b_{n_i - 4}(P_i) + (n-3)(l-1),  l = summand count.
long long multiway_bn4(std::span<const long long> summand_bn4, int n);

// Inverts b_2 = C(n,2) - 3n + 6: n = (7 + sqrt(8 b_2 + 1)) / 2.  Exact
// integer square root; throws NotRealizable when no integer n >= 4 fits.
int vertices_from_b2(long long b2);

// Largest b_{n-4} over irreducible n-vertex spheres:
//   f(n) = C(n-3,2) - 1 + [n == 6], attained by the bipyramid alone
//   (and by T4 at n = 4).  Pre: n >= 4.
long long bound_f(int n);

// Bound for irreducible non-bipyramids: C(n-5,2) + 2, met exactly by the
// semi-bipyramid.  Pre: n >= 4.
long long bound_second(int n);

// Bound on b_{n-4} over sums of l irreducibles:
//   C(n-3,2) + l(l-3)/2 + [l == n-5].
// Pre: n >= 4, 1 <= l <= n-3 (l summands need at least l+3 vertices).
long long bound_multi(int n, int ell);

}  // namespace trisph
