#include "trisph/hochster.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trisph {
namespace {

// Rank of a dense matrix over F_p.  rows x cols, row-major, entries already
// reduced mod p.  Destroys m.
int rank_mod_p(std::vector<long long>& m, int rows, int cols, long long p) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c)
        std::swap(m[pivot * cols + c], m[rank * cols + c]);
    // Normalize pivot row to 1 via Fermat inverse.
    long long inv = 1, base = m[rank * cols + col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int c = col; c < cols; ++c)
      m[rank * cols + c] = m[rank * cols + c] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long long factor = m[r * cols + col];
      if (!factor) continue;
      for (int c = col; c < cols; ++c) {
        m[r * cols + c] =
            (m[r * cols + c] - factor * m[rank * cols + c]) % p;
        if (m[r * cols + c] < 0) m[r * cols + c] += p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GradedBettiTable hochster_table(const Triangulation& t, long long characteristic,
                                int cap) {
  if (characteristic != 2 && characteristic != kCharZeroPrime)
    fail(Err::OutOfRange, "characteristic must be 2 or " +
                              std::to_string(kCharZeroPrime));
  const int n = t.vertex_count();
  if (n > cap)
    fail(Err::CapExceeded, "hochster cap is " + std::to_string(cap) +
                               ", have n=" + std::to_string(n));
  const long long p = characteristic;

  GradedBettiTable table{n, std::vector<std::vector<long long>>(
                                n - 2, std::vector<long long>(n + 1, 0))};

  // Vertex pairs and faces as masks for fast induced restriction.
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int u : t.neighbors(v))
      if (u > v) edges.push_back({v, u});
  const auto& faces = t.faces();

  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    const int j = std::popcount(w);

    // Index the vertices of W.
    std::vector<int> vid(n, -1);
    int nv = 0;
    for (int v = 0; v < n; ++v)
      if (w >> v & 1) vid[v] = nv++;

    std::vector<std::pair<int, int>> ew;
    for (auto [a, b] : edges)
      if (vid[a] >= 0 && vid[b] >= 0) ew.push_back({vid[a], vid[b]});
    std::vector<std::array<int, 3>> fw;
    for (const auto& f : faces)
      if (vid[f[0]] >= 0 && vid[f[1]] >= 0 && vid[f[2]] >= 0)
        fw.push_back({vid[f[0]], vid[f[1]], vid[f[2]]});

    const int ne = static_cast<int>(ew.size());
    const int nf = static_cast<int>(fw.size());

    // Reduced chain complex 0 -> C_2 -> C_1 -> C_0 -> C_{-1} = F -> 0.
    // d0 is the augmentation row; signs don't affect rank but keep the
    // usual simplicial boundary for characteristic p.
    int rank0 = nv > 0 ? 1 : 0;

    int rank1 = 0;
    if (ne > 0) {
      std::vector<long long> d1(static_cast<size_t>(nv) * ne, 0);
      for (int e = 0; e < ne; ++e) {
        d1[static_cast<size_t>(ew[e].first) * ne + e] = p - 1;  // -1
        d1[static_cast<size_t>(ew[e].second) * ne + e] = 1;
      }
      rank1 = rank_mod_p(d1, nv, ne, p);
    }

    int rank2 = 0;
    if (nf > 0) {
      std::vector<long long> edge_index(static_cast<size_t>(nv) * nv, -1);
      for (int e = 0; e < ne; ++e)
        edge_index[static_cast<size_t>(ew[e].first) * nv + ew[e].second] = e;
      std::vector<long long> d2(static_cast<size_t>(ne) * nf, 0);
      for (int fi = 0; fi < nf; ++fi) {
        auto [a, b, c] = fw[fi];  // a < b < c
        d2[edge_index[static_cast<size_t>(b) * nv + c] * nf + fi] = 1;
        d2[edge_index[static_cast<size_t>(a) * nv + c] * nf + fi] = p - 1;
        d2[edge_index[static_cast<size_t>(a) * nv + b] * nf + fi] = 1;
      }
      rank2 = rank_mod_p(d2, ne, nf, p);
    }

    // dim H~_d = nullity(d_d) - rank(d_{d+1}).
    const int hm1 = (nv == 0 ? 1 : 0);
    const int h0 = (nv - rank0) - rank1;
    const int h1 = (ne - rank1) - rank2;
    const int h2 = nf - rank2;
    for (auto [d, dim] : {std::pair{-1, hm1}, {0, h0}, {1, h1}, {2, h2}}) {
      if (dim == 0) continue;
      const int i = j - d - 1;
      if (i < 0 || i > n - 3)
        throw std::logic_error("homology outside the graded table range");
      table.beta[i][j] += dim;
    }
  }
  return table;
}

long long hochster_beta(const Triangulation& t, int i, int j,
                        long long characteristic, int cap) {
  const int n = t.vertex_count();
  if (i < 0 || i > n - 3 || j < 0 || j > n)
    fail(Err::OutOfRange, "beta index out of range");
  return hochster_table(t, characteristic, cap).at(i, j);
}

GradedBettiTable hochster_table_checked(const Triangulation& t, int cap) {
  GradedBettiTable a = hochster_table(t, 2, cap);
  GradedBettiTable b = hochster_table(t, kCharZeroPrime, cap);
  if (!(a == b))
    throw std::logic_error(
        "graded Betti numbers differ between characteristics (torsion?)");
  return a;
}

GradedBettiTable graded_table(const Triangulation& t) {
  const int n = t.vertex_count();
  const BettiVector bv = betti_sweep(t);
  GradedBettiTable table{n, std::vector<std::vector<long long>>(
                                n - 2, std::vector<long long>(n + 1, 0))};
  table.beta[0][0] = 1;
  table.beta[n - 3][n] = 1;
  for (int j = 1; j <= n; ++j) {
    if (j - 1 <= n - 3 && bv.b[j] != 0) table.beta[j - 1][j] = bv.b[j];
    if (j - 2 >= 0 && j - 2 <= n - 3 && j < n && bv.b[n - j] != 0)
      table.beta[j - 2][j] = bv.b[n - j];
  }
  return table;
}

}  // namespace trisph
