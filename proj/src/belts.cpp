#include "trisph/belts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace trisph {
namespace {

// Components of the induced subgraph on mask (n <= 64).
int mask_components(std::uint64_t mask, const std::uint64_t* adj) {
  int cc = 0;
  std::uint64_t rem = mask;
  while (rem) {
    std::uint64_t comp = rem & (~rem + 1);
    for (;;) {
      std::uint64_t grow = 0;
      std::uint64_t f = comp;
      while (f) {
        grow |= adj[std::countr_zero(f)];
        f &= f - 1;
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

bool complement_disconnected(const Triangulation& t, std::uint64_t cycle_mask) {
  const std::uint64_t all =
      (t.vertex_count() == 64) ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << t.vertex_count()) - 1;
  const std::uint64_t rest = all & ~cycle_mask;
  if (rest == 0) return false;
  return mask_components(rest, t.adjacency_masks().data()) >= 2;
}

std::vector<Belt> belts3(const Triangulation& t) {
  std::vector<Belt> out;
  for (const auto& tri : detail::nonfacial_triangles(t))
    out.push_back(Belt{3, {tri[0], tri[1], tri[2]}});
  return out;  // triples are sorted, list is sorted
}

std::vector<Belt> belts4(const Triangulation& t) {
  const auto* adj = t.adjacency_masks().data();
  const int n = t.vertex_count();
  std::vector<Belt> out;
  // A 4-belt is determined by its two diagonals {a,c}, {b,d}: non-adjacent
  // opposite pairs.  Forcing a to be the overall minimum counts each once.
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c) {
      if (t.has_edge(a, c)) continue;
      const std::uint64_t common = adj[a] & adj[c];
      for (int b = a + 1; b < n; ++b) {
        if (!(common >> b & 1)) continue;
        for (int d = b + 1; d < n; ++d) {
          if (!(common >> d & 1) || t.has_edge(b, d)) continue;
          const std::uint64_t mask = (std::uint64_t{1} << a) |
                                     (std::uint64_t{1} << b) |
                                     (std::uint64_t{1} << c) |
                                     (std::uint64_t{1} << d);
          if (complement_disconnected(t, mask))
            out.push_back(Belt{4, {a, b, c, d}});
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Chordless cycles of length k, canonical orientation (v0 minimal, second
// vertex smaller than last), separation-checked.
void dfs_cycles(const Triangulation& t, int k, std::vector<int>& path,
                std::uint64_t path_mask, std::vector<Belt>& out) {
  const auto* adj = t.adjacency_masks().data();
  const int v0 = path[0];
  const int last = path.back();
  const int depth = static_cast<int>(path.size());
  for (int w : t.neighbors(last)) {
    if (w <= v0 || (path_mask >> w & 1)) continue;
    if (depth == k - 1) {
      if (!t.has_edge(w, v0)) continue;
      if (path[1] > w) continue;  // reflection: keep second < last
      // Chordless: w may touch only last and v0.
      const std::uint64_t allowed = (std::uint64_t{1} << last) |
                                    (std::uint64_t{1} << v0);
      if ((adj[w] & path_mask & ~allowed) != 0) continue;
      const std::uint64_t mask = path_mask | (std::uint64_t{1} << w);
      if (complement_disconnected(t, mask)) {
        Belt b{k, path};
        b.vertices.push_back(w);
        out.push_back(std::move(b));
      }
    } else {
      // Interior vertex: adjacent to last only (v0 included in the ban).
      if ((adj[w] & path_mask & ~(std::uint64_t{1} << last)) != 0) continue;
      path.push_back(w);
      dfs_cycles(t, k, path, path_mask | (std::uint64_t{1} << w), out);
      path.pop_back();
    }
  }
}

std::vector<Belt> belts_general(const Triangulation& t, int k) {
  std::vector<Belt> out;
  std::vector<int> path;
  for (int v0 = 0; v0 < t.vertex_count(); ++v0) {
    path.assign(1, v0);
    dfs_cycles(t, k, path, std::uint64_t{1} << v0, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

namespace detail {

std::vector<std::array<int, 3>> nonfacial_triangles(const Triangulation& t) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < t.vertex_count(); ++a)
    for (int b : t.neighbors(a)) {
      if (b <= a) continue;
      for (int c : t.neighbors(b)) {
        if (c <= b || !t.has_edge(a, c)) continue;
        if (!t.has_face(a, b, c)) out.push_back({a, b, c});
      }
    }
  return out;
}

long long count_belts_3(const Triangulation& t) {
  return static_cast<long long>(nonfacial_triangles(t).size());
}

long long count_belts_4(const Triangulation& t) {
  if (t.vertex_count() < 6) return 0;  // complement of 4 must be 2+ vertices
  return static_cast<long long>(belts4(t).size());
}

}  // namespace detail

std::vector<Belt> find_belts(const Triangulation& t, int k) {
  if (k < 3 || k > t.vertex_count() - 2)
    fail(Err::OutOfRange, "belt length must satisfy 3 <= k <= n-2");
  if (k == 3) return belts3(t);
  if (k == 4) return belts4(t);
  return belts_general(t, k);
}

bool is_irreducible(const Triangulation& t) {
  return detail::nonfacial_triangles(t).empty();
}

std::map<int, long long> belt_profile(const Triangulation& t) {
  std::map<int, long long> profile;
  for (int k = 3; k <= t.vertex_count() - 2; ++k)
    profile[k] = static_cast<long long>(find_belts(t, k).size());
  return profile;
}

}  // namespace trisph
