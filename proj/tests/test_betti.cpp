#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "trisph/betti.hpp"
#include "trisph/constructions.hpp"
#include "trisph/hochster.hpp"
#include "trisph/surgery.hpp"

using namespace trisph;
using testutil::census_level;
using testutil::error_kind;

namespace {

Triangulation sum_first(const Triangulation& a, const Triangulation& b) {
  return connected_sum(a, b, Gluing{a.faces().front(), b.faces().front(), 0});
}

}  // namespace

TEST_CASE("known b-vectors") {
  BettiVector t4 = betti_sweep(tetrahedron());
  CHECK(t4.b == std::vector<long long>{-1, 0, 0, 0, 0});

  BettiVector o6 = betti_sweep(octahedron());
  CHECK(o6.b == std::vector<long long>{-1, 0, 3, 0, 0, 0, 0});
  CHECK(betti_text(o6) == "-1,0,3,0,0,0,0");
  CHECK(betti_from_text(6, "-1,0,3,0,0,0,0") == o6);

  CHECK(betti_sweep(bipyramid(5)).b[2] == 1);
  CHECK(betti_sweep(bipyramid(7)).b[3] == 5);
  CHECK(betti_sweep(bipyramid(8)).b[4] == 9);
  CHECK(betti_sweep(icosahedron()).b[8] == betti_bruteforce(icosahedron(), 8));

  CHECK(error_kind([] { betti_from_text(6, "-1,0,3"); }) ==
        Err::CorruptDatabase);
  CHECK(error_kind([] { betti_from_text(4, "-1,0,x,0,0"); }) ==
        Err::CorruptDatabase);
}

TEST_CASE("sweep agrees with per-k brute force on the census") {
  CHECK(betti_bruteforce(bipyramid(5), 2) == 1);
  CHECK(betti_bruteforce(bipyramid(7), 3) == 5);
  for (int n = 4; n <= 10; ++n)
    for (const auto& t : census_level(n)) {
      BettiVector s = betti_sweep(t);
      REQUIRE(s.n == n);
      REQUIRE(static_cast<int>(s.b.size()) == n + 1);
      for (int k = 0; k <= n; ++k) CHECK(s.b[k] == betti_bruteforce(t, k));
    }
}

TEST_CASE("sweep is thread-count independent") {
  Triangulation b12 = bipyramid(12);
  BettiVector one = betti_sweep(b12);
  SweepOptions opt;
  opt.threads = 3;
  CHECK(betti_sweep(b12, opt) == one);
  opt.threads = 8;
  CHECK(betti_sweep(b12, opt) == one);
}

TEST_CASE("sweep refuses past its cap") {
  SweepOptions opt;
  opt.cap = 7;
  CHECK(error_kind([&] { betti_sweep(bipyramid(8), opt); }) ==
        Err::CapExceeded);
}

TEST_CASE("structural facts about b-vectors") {
  for (int n = 4; n <= 10; ++n)
    for (const auto& t : census_level(n)) {
      BettiVector s = betti_sweep(t);
      CHECK(s.b[0] == -1);
      CHECK(s.b[1] == 0);
      CHECK(s.b[2] == binomial(n, 2) - (3 * n - 6));
      for (int k = 1; k <= n; ++k) CHECK(s.b[k] >= 0);
      for (int k = std::max(1, n - 2); k <= n; ++k) CHECK(s.b[k] == 0);
      CHECK(vertices_from_b2(s.b[2]) == n);
    }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(10, -1) == 0);
  CHECK(binomial(10, 11) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534LL);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(error_kind([] { binomial(65, 0); }) == Err::OutOfRange);
  CHECK(error_kind([] { binomial(-1, 0); }) == Err::OutOfRange);
}

TEST_CASE("bipyramid closed form matches the sweep") {
  CHECK(bipyramid_b(6, 2) == 3);
  CHECK(bipyramid_b(9, 5) == 14);
  CHECK(bipyramid_b(8, 4) == 9);
  for (int n = 5; n <= 14; ++n) {
    BettiVector s = betti_sweep(bipyramid(n));
    for (int k = 0; k <= n - 3; ++k) CHECK(bipyramid_b(n, k) == s.b[k]);
  }
  CHECK(error_kind([] { bipyramid_b(4, 0); }) == Err::OutOfRange);
  CHECK(error_kind([] { bipyramid_b(6, 4); }) == Err::OutOfRange);
  CHECK(error_kind([] { bipyramid_b(6, -1); }) == Err::OutOfRange);
}

TEST_CASE("connected sum formula matches built sums") {
  std::vector<Triangulation> pool = {tetrahedron(), octahedron(), bipyramid(5),
                                     bipyramid(7)};
  for (const auto& p1 : pool)
    for (const auto& p2 : pool) {
      BettiVector b1 = betti_sweep(p1);
      BettiVector b2 = betti_sweep(p2);
      int n = p1.vertex_count() + p2.vertex_count() - 3;
      for (const auto& f1 : p1.faces())
        for (int m = 0; m < 6; ++m) {
          Triangulation s =
              connected_sum(p1, p2, Gluing{f1, p2.faces().back(), m});
          BettiVector bs = betti_sweep(s);
          REQUIRE(bs.n == n);
          for (int k = 0; k <= n; ++k)
            CHECK(bs.b[k] == connected_sum_b(b1, b2, 3, k));
        }
    }
  BettiVector bt = betti_sweep(tetrahedron());
  CHECK(connected_sum_b(bt, bt, 3, 0) == -1);
}

TEST_CASE("multiway top-degree formula") {
  long long t4[] = {-1, -1, -1};
  CHECK(multiway_bn4(t4, 6) == 3);
  // Two summands reduce to the pairwise formula at k = n-4.
  for (int n2 = 7; n2 <= 10; ++n2) {
    BettiVector bo = betti_sweep(octahedron());
    BettiVector bb = betti_sweep(bipyramid(n2));
    long long pair[] = {bo.b[2], bb.b[n2 - 4]};
    int n = 6 + n2 - 3;
    CHECK(multiway_bn4(pair, n) == connected_sum_b(bo, bb, 3, n - 4));
  }
  // And against an actually built three-way sum.
  Triangulation chain = sum_first(sum_first(octahedron(), octahedron()),
                                  bipyramid(7));
  int n = chain.vertex_count();
  REQUIRE(n == 13);
  long long three[] = {3, 3, 5};
  CHECK(multiway_bn4(three, n) == betti_sweep(chain).b[n - 4]);
}

TEST_CASE("vertex count recovery from b2") {
  CHECK(vertices_from_b2(0) == 4);
  CHECK(vertices_from_b2(1) == 5);
  CHECK(vertices_from_b2(3) == 6);
  CHECK(vertices_from_b2(binomial(64, 2) - 186) == 64);
  CHECK(error_kind([] { vertices_from_b2(2); }) == Err::NotRealizable);
  CHECK(error_kind([] { vertices_from_b2(4); }) == Err::NotRealizable);
  CHECK(error_kind([] { vertices_from_b2(-1); }) == Err::NotRealizable);
}

TEST_CASE("extremal bounds") {
  CHECK(bound_f(4) == -1);
  CHECK(bound_f(5) == 0);
  CHECK(bound_f(6) == 3);
  CHECK(bound_f(8) == 9);
  CHECK(bound_second(8) == 5);
  CHECK(bound_second(9) == 8);
  CHECK(bound_multi(6, 3) == 3);
  // One part degenerates to the single-sphere bound.
  for (int n = 4; n <= 30; ++n) CHECK(bound_multi(n, 1) == bound_f(n));
  CHECK(error_kind([] { bound_f(3); }) == Err::OutOfRange);
  CHECK(error_kind([] { bound_second(3); }) == Err::OutOfRange);
  CHECK(error_kind([] { bound_multi(6, 0); }) == Err::OutOfRange);
  CHECK(error_kind([] { bound_multi(6, 4); }) == Err::OutOfRange);
}

TEST_CASE("trading vertices between two summands raises the bound sum") {
  for (int m = 5; m <= 30; ++m)
    for (int n = 5; n <= m; ++n) {
      if (m == 6 && n == 6) {
        CHECK(bound_f(6) + bound_f(6) < bound_f(8) + bound_f(4));
      } else {
        CHECK(bound_f(m) + bound_f(n) < bound_f(m + 1) + bound_f(n - 1));
      }
    }
}

TEST_CASE("summand bound sums stay within the multiway bound") {
  // All multisets n_1 >= ... >= n_l >= 4 with sum n + 3(l-1).
  struct Walk {
    int n = 0;
    std::vector<int> parts;
    void run(int remaining, int max_part, int slots) {
      if (slots == 0) {
        if (remaining != 0) return;
        long long sum = 0;
        for (int p : parts) sum += bound_f(p);
        int l = static_cast<int>(parts.size());
        long long cap = binomial(n - 2, 2) - 1LL * n * l +
                        1LL * l * (l + 3) / 2 + (l == n - 5 ? 1 : 0);
        // Adding the cross terms of an l-fold sum turns this cap into the
        // multiway bound.
        CHECK(cap + 1LL * (l - 1) * (n - 3) == bound_multi(n, l));
        CHECK(sum <= cap);
        // Equality exactly when one part takes everything, the rest are
        // tetrahedra.
        std::vector<int> extreme(parts.size(), 4);
        extreme[0] = n - l + 1;
        CHECK((sum == cap) == (parts == extreme));
        return;
      }
      for (int p = std::min(max_part, remaining - 4 * (slots - 1)); p >= 4;
           --p) {
        parts.push_back(p);
        run(remaining - p, p, slots - 1);
        parts.pop_back();
      }
    }
  };
  for (int n = 4; n <= 14; ++n)
    for (int l = 1; l <= 5 && l <= n - 3; ++l) {
      Walk w;
      w.n = n;
      w.run(n + 3 * (l - 1), n, l);
    }
}

TEST_CASE("graded table agrees with rank computations in both characteristics") {
  for (int n = 4; n <= 7; ++n)
    for (const auto& t : census_level(n)) {
      GradedBettiTable g = graded_table(t);
      CHECK(g == hochster_table(t, 2));
      CHECK(g == hochster_table(t, kCharZeroPrime));
      CHECK(g == hochster_table_checked(t));
    }
  Triangulation o6 = octahedron();
  CHECK(hochster_beta(o6, 1, 2, 2) == 3);
  CHECK(hochster_beta(o6, 3, 6, 2) == 1);
  CHECK(hochster_beta(o6, 1, 2, kCharZeroPrime) == 3);
  CHECK(error_kind([&] { hochster_table(o6, 5); }) == Err::OutOfRange);
  CHECK(error_kind([&] { hochster_table(bipyramid(10), 2); }) ==
        Err::CapExceeded);
}

TEST_CASE("graded table shape and duality") {
  Triangulation o6 = octahedron();
  GradedBettiTable g = graded_table(o6);
  REQUIRE(g.n == 6);
  REQUIRE(g.beta.size() == 4);
  for (const auto& row : g.beta) REQUIRE(row.size() == 7);
  CHECK(g.at(0, 0) == 1);
  CHECK(g.at(3, 6) == 1);
  CHECK(g.at(1, 2) == 3);
  CHECK(g.at(2, 4) == 3);
  CHECK(g.at(0, 1) == 0);
  for (int n = 4; n <= 9; ++n)
    for (const auto& t : census_level(n)) {
      GradedBettiTable tab = graded_table(t);
      for (int i = 0; i <= n - 3; ++i)
        for (int j = 0; j <= n; ++j)
          CHECK(tab.at(i, j) == tab.at(n - 3 - i, n - j));
    }
}
