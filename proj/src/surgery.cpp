#include "trisph/surgery.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trisph {
namespace {

constexpr int kMatchings[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

std::string triple_str(const std::array<int, 3>& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
         std::to_string(f[2]) + "}";
}

}  // namespace

Triangulation connected_sum(const Triangulation& p1, const Triangulation& p2,
                            const Gluing& g) {
  auto f1 = g.face1, f2 = g.face2;
  std::sort(f1.begin(), f1.end());
  std::sort(f2.begin(), f2.end());
  if (!p1.has_face(f1[0], f1[1], f1[2]))
    fail(Err::InvalidGluing, "first summand has no face " + triple_str(f1));
  if (!p2.has_face(f2[0], f2[1], f2[2]))
    fail(Err::InvalidGluing, "second summand has no face " + triple_str(f2));
  if (g.matching < 0 || g.matching >= 6)
    fail(Err::InvalidGluing, "matching must be in [0, 6)");

  // Relabel P2: glued vertices land on face1, the rest go after P1.
  std::vector<int> relabel(p2.vertex_count(), -1);
  for (int j = 0; j < 3; ++j) relabel[f2[j]] = f1[kMatchings[g.matching][j]];
  int next = p1.vertex_count();
  for (int v = 0; v < p2.vertex_count(); ++v)
    if (relabel[v] < 0) relabel[v] = next++;

  std::vector<std::array<int, 3>> faces;
  faces.reserve(p1.face_count() + p2.face_count() - 2);
  for (const auto& f : p1.faces())
    if (f != f1) faces.push_back(f);
  for (const auto& f : p2.faces())
    if (f != f2) faces.push_back({relabel[f[0]], relabel[f[1]], relabel[f[2]]});
  return Triangulation::build(std::move(faces));
}

std::vector<Triangulation> all_connected_sums(const Triangulation& p1,
                                              const Triangulation& p2) {
  std::map<CanonicalCode, Triangulation> classes;
  for (const auto& f1 : p1.faces())
    for (const auto& f2 : p2.faces())
      for (int m = 0; m < 6; ++m) {
        Triangulation sum = connected_sum(p1, p2, Gluing{f1, f2, m});
        CanonicalCode code = canonical_code(sum);
        classes.emplace(std::move(code), std::move(sum));
      }
  std::vector<Triangulation> out;
  out.reserve(classes.size());
  for (auto& [code, tri] : classes) out.push_back(std::move(tri));
  return out;
}

std::pair<Triangulation, Triangulation> split(const Triangulation& t,
                                              const Belt& belt3) {
  if (belt3.vertices.size() != 3)
    fail(Err::NotABelt, "split needs a 3-belt");
  std::array<int, 3> b{belt3.vertices[0], belt3.vertices[1], belt3.vertices[2]};
  std::sort(b.begin(), b.end());
  for (int v : b)
    if (v < 0 || v >= t.vertex_count())
      fail(Err::NotABelt, "belt vertex out of range");
  if (b[0] == b[1] || b[1] == b[2])
    fail(Err::NotABelt, "belt vertices must be distinct");
  if (!t.has_edge(b[0], b[1]) || !t.has_edge(b[0], b[2]) ||
      !t.has_edge(b[1], b[2]))
    fail(Err::NotABelt, triple_str(b) + " is not a triangle of the graph");
  if (t.has_face(b[0], b[1], b[2]))
    fail(Err::NotABelt, triple_str(b) + " is a face, not a belt");

  // Flood the complement of the belt; a separating triangle on a sphere
  // leaves exactly two sides.
  std::vector<int> side(t.vertex_count(), -1);
  for (int v : b) side[v] = 2;  // sentinel: on the belt
  int sides = 0;
  for (int s = 0; s < t.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    if (sides >= 2)
      throw std::logic_error("separating triangle with more than two sides");
    std::vector<int> stack{s};
    side[s] = sides;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : t.neighbors(v))
        if (side[u] < 0) {
          side[u] = sides;
          stack.push_back(u);
        }
    }
    ++sides;
  }
  if (sides != 2)
    fail(Err::NotABelt, triple_str(b) + " does not separate the sphere");

  auto part = [&](int keep) {
    std::vector<int> relabel(t.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < t.vertex_count(); ++v)
      if (side[v] == keep || side[v] == 2) relabel[v] = next++;
    std::vector<std::array<int, 3>> faces;
    for (const auto& f : t.faces()) {
      if (relabel[f[0]] < 0 || relabel[f[1]] < 0 || relabel[f[2]] < 0)
        continue;
      faces.push_back({relabel[f[0]], relabel[f[1]], relabel[f[2]]});
    }
    faces.push_back({relabel[b[0]], relabel[b[1]], relabel[b[2]]});
    return Triangulation::build(std::move(faces));
  };
  return {part(0), part(1)};
}

namespace {

void decompose_into(const Triangulation& t, DecompositionTree& tree) {
  auto belts = detail::nonfacial_triangles(t);
  if (belts.empty()) {
    tree.leaves.push_back(canonical_code(t));
    return;
  }
  const auto& b = belts.front();  // sorted scan yields the lex-least belt
  tree.splits.push_back({b});
  auto [left, right] = split(t, Belt{3, {b[0], b[1], b[2]}});
  decompose_into(left, tree);
  decompose_into(right, tree);
}

}  // namespace

DecompositionTree decompose(const Triangulation& t) {
  DecompositionTree tree;
  decompose_into(t, tree);
  std::sort(tree.leaves.begin(), tree.leaves.end());
  return tree;
}

}  // namespace trisph
