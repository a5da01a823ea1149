#include "trisph/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <thread>

namespace trisph {

std::string betti_text(const BettiVector& v) {
  std::string s;
  for (int k = 0; k <= v.n; ++k) {
    if (k) s += ",";
    s += std::to_string(v.b[k]);
  }
  return s;
}

BettiVector betti_from_text(int n, const std::string& text) {
  BettiVector v{n, {}};
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    long long val;
    try {
      val = std::stoll(item, &used);
    } catch (const std::exception&) {
      fail(Err::CorruptDatabase, "bad b entry '" + item + "'");
    }
    if (used != item.size())
      fail(Err::CorruptDatabase, "bad b entry '" + item + "'");
    v.b.push_back(val);
  }
  if (static_cast<int>(v.b.size()) != n + 1)
    fail(Err::CorruptDatabase, "b vector has " + std::to_string(v.b.size()) +
                                   " entries for n=" + std::to_string(n));
  return v;
}

namespace {

// Connected components of the subgraph induced on `mask`.
inline int mask_components(std::uint64_t mask, const std::uint64_t* adj) {
  int cc = 0;
  std::uint64_t rem = mask;
  while (rem) {
    std::uint64_t comp = rem & (~rem + 1);
    for (;;) {
      std::uint64_t grow = 0;
      std::uint64_t f = comp;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        grow |= adj[v];
      }
      grow &= rem;
      grow |= comp;
      if (grow == comp) break;
      comp = grow;
    }
    rem &= ~comp;
    ++cc;
  }
  return cc;
}

void sweep_range(const std::uint64_t* adj, std::uint64_t lo, std::uint64_t hi,
                 long long* acc) {
  for (std::uint64_t mask = lo; mask < hi; ++mask)
    acc[std::popcount(mask)] += mask_components(mask, adj) - 1;
}

}  // namespace

BettiVector betti_sweep(const Triangulation& t, const SweepOptions& opt) {
  const int n = t.vertex_count();
  if (n > opt.cap)
    fail(Err::CapExceeded, "betti_sweep cap is " + std::to_string(opt.cap) +
                               ", have n=" + std::to_string(n));
  const std::uint64_t* adj = t.adjacency_masks().data();
  const std::uint64_t total = std::uint64_t{1} << n;

  BettiVector out{n, std::vector<long long>(n + 1, 0)};
  const int workers = std::clamp(opt.threads, 1, 64);
  if (workers == 1) {
    sweep_range(adj, 0, total, out.b.data());
    return out;
  }
  std::vector<std::vector<long long>> acc(workers,
                                          std::vector<long long>(n + 1, 0));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = total / workers * w;
    const std::uint64_t hi =
        (w + 1 == workers) ? total : total / workers * (w + 1);
    pool.emplace_back(sweep_range, adj, lo, hi, acc[w].data());
  }
  for (auto& th : pool) th.join();
  for (int w = 0; w < workers; ++w)
    for (int k = 0; k <= n; ++k) out.b[k] += acc[w][k];
  return out;
}

long long betti_bruteforce(const Triangulation& t, int k) {
  const int n = t.vertex_count();
  if (k < 0 || k > n) fail(Err::OutOfRange, "k out of range");
  if (k == 0) return -1;

  std::vector<int> pick(k), parent(k), rank_(k);
  for (int i = 0; i < k; ++i) pick[i] = i;

  struct Dsu {
    std::vector<int>& p;
    int find(int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    }
    bool unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      p[a] = b;
      return true;
    }
  };

  long long total = 0;
  for (;;) {
    Dsu dsu{parent};
    for (int i = 0; i < k; ++i) parent[i] = i;
    int comps = k;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (t.has_edge(pick[i], pick[j]) && dsu.unite(i, j)) --comps;
    total += comps - 1;

    int at = k - 1;
    while (at >= 0 && pick[at] == n - k + at) --at;
    if (at < 0) break;
    ++pick[at];
    for (int i = at + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return total;
}

long long binomial(int n, int k) {
  if (n < 0 || n > 64) fail(Err::OutOfRange, "binomial needs 0 <= n <= 64");
  if (k < 0 || k > n) return 0;
  static const auto table = [] {
    std::vector<std::vector<long long>> c(65);
    for (int i = 0; i <= 64; ++i) {
      c[i].assign(i + 1, 1);
      for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
  }();
  return table[n][k];
}

long long bipyramid_b(int n, int k) {
  if (n < 5 || k < 0 || k > n - 3)
    fail(Err::OutOfRange, "bipyramid_b needs n >= 5, 0 <= k <= n-3");
  const long long num =
      static_cast<long long>(n - 2) * (k - 1) * binomial(n - 4, k);
  const long long den = n - 2 - k;
  if (num % den != 0)
    throw std::logic_error("bipyramid_b: non-integral closed form");
  return num / den + (k == 2 ? 1 : 0);
}

long long connected_sum_b(const BettiVector& b1, const BettiVector& b2, int d,
                          int k) {
  const int n1 = b1.n, n2 = b2.n;
  if (k < 0 || k > n1 + n2 - d) fail(Err::OutOfRange, "k out of range");
  long long sum = 0;
  for (int i = 0; i <= k; ++i) {
    if (i <= n1) sum += b1.b[i] * binomial(n2 - d, k - i);
    if (i <= n2) sum += b2.b[i] * binomial(n1 - d, k - i);
  }
  return sum + binomial(n1 + n2 - 2 * d, k);
}

long long multiway_bn4(std::span<const long long> summand_bn4, int n) {
  const long long ell = static_cast<long long>(summand_bn4.size());
  long long sum = 0;
  for (long long v : summand_bn4) sum += v;
  return sum + static_cast<long long>(n - 3) * (ell - 1);
}

int vertices_from_b2(long long b2) {
  if (b2 < 0) fail(Err::NotRealizable, "b_2 must be nonnegative");
  if (b2 > (1LL << 55)) fail(Err::NotRealizable, "b_2 out of range");
  const long long target = 8 * b2 + 1;
  long long s = target;  // integer Newton iteration for floor(sqrt)
  for (long long next = (s + 1) / 2; next < s;) {
    s = next;
    next = (s + target / s) / 2;
  }
  if (s * s != target)
    fail(Err::NotRealizable, "8 b_2 + 1 = " + std::to_string(target) +
                                 " is not a perfect square");
  if ((7 + s) % 2 != 0)
    fail(Err::NotRealizable, "7 + sqrt(8 b_2 + 1) is odd");
  const long long n = (7 + s) / 2;
  if (n < 4) fail(Err::NotRealizable, "n < 4");
  return static_cast<int>(n);
}

long long bound_f(int n) {
  if (n < 4) fail(Err::OutOfRange, "bound_f needs n >= 4");
  return binomial(n - 3, 2) - 1 + (n == 6 ? 1 : 0);
}

long long bound_second(int n) {
  if (n < 4) fail(Err::OutOfRange, "bound_second needs n >= 4");
  return (n >= 5 ? binomial(n - 5, 2) : 0) + 2;
}

long long bound_multi(int n, int ell) {
  if (n < 4 || ell < 1 || ell > n - 3)
    fail(Err::OutOfRange, "bound_multi needs n >= 4 and 1 <= l <= n-3");
  return binomial(n - 3, 2) +
         static_cast<long long>(ell) * (ell - 3) / 2 +
         (ell == n - 5 ? 1 : 0);
}

}  // namespace trisph
