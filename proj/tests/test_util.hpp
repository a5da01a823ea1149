#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "trisph/census.hpp"
#include "trisph/errors.hpp"
#include "trisph/triangulation.hpp"

namespace testutil {

inline trisph::Triangulation make_tri(std::vector<std::array<int, 3>> faces) {
  return trisph::Triangulation::build(std::move(faces));
}

inline trisph::Triangulation relabel(const trisph::Triangulation& t,
                                     const std::vector<int>& perm) {
  std::vector<std::array<int, 3>> faces;
  for (const auto& f : t.faces())
    faces.push_back({perm[f[0]], perm[f[1]], perm[f[2]]});
  return trisph::Triangulation::build(std::move(faces));
}

inline std::vector<int> random_perm(int n, unsigned seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Isomorphism by exhausting label bijections; usable up to n around 8.
inline bool brute_isomorphic(const trisph::Triangulation& a,
                             const trisph::Triangulation& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.faces().size() != b.faces().size()) return false;
  const auto& target = b.faces();
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::array<int, 3>> mapped;
    mapped.reserve(a.faces().size());
    for (const auto& f : a.faces()) {
      std::array<int, 3> g{perm[f[0]], perm[f[1]], perm[f[2]]};
      std::sort(g.begin(), g.end());
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// One census level, enumerated once per test binary.
inline const std::vector<trisph::Triangulation>& census_level(int n) {
  static std::map<int, std::vector<trisph::Triangulation>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    trisph::EnumerateOptions opts;
    opts.cap = std::max(13, n);
    it = cache.emplace(n, trisph::enumerate_triangulations(n, opts)).first;
  }
  return it->second;
}

// Runs fn and reports the Err kind it throws, or nullopt if it returns.
template <typename Fn>
std::optional<trisph::Err> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const trisph::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testutil
