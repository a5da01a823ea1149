#include "trisph/triangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace trisph {
namespace {

std::string triple_str(const std::array<int, 3>& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
         std::to_string(f[2]) + "}";
}

std::string edge_str(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

Triangulation Triangulation::build(std::vector<std::array<int, 3>> faces) {
  if (faces.empty()) fail(Err::NotASphere, "no faces");

  int n = 0;
  for (auto& f : faces) {
    for (int v : f) {
      if (v < 0) fail(Err::MalformedFace, "negative vertex id in " + triple_str(f));
      n = std::max(n, v + 1);
    }
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2])
      fail(Err::MalformedFace, "repeated vertex in face " + triple_str(f));
  }
  std::sort(faces.begin(), faces.end());
  for (size_t i = 1; i < faces.size(); ++i)
    if (faces[i] == faces[i - 1])
      fail(Err::MalformedFace, "duplicate face " + triple_str(faces[i]));

  if (n < 4) fail(Err::NotASphere, "fewer than 4 vertices");
  if (static_cast<int>(faces.size()) != 2 * n - 4)
    fail(Err::NotASphere, "face count " + std::to_string(faces.size()) +
                              " != 2n-4 for n=" + std::to_string(n));

  // Edge -> incident faces.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& f = faces[fi];
    edge_faces[{f[0], f[1]}].push_back(static_cast<int>(fi));
    edge_faces[{f[0], f[2]}].push_back(static_cast<int>(fi));
    edge_faces[{f[1], f[2]}].push_back(static_cast<int>(fi));
  }
  if (static_cast<int>(edge_faces.size()) != 3 * n - 6)
    fail(Err::NotASphere, "edge count " + std::to_string(edge_faces.size()) +
                              " != 3n-6 for n=" + std::to_string(n));
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() != 2)
      fail(Err::NotASphere, "edge " + edge_str(e.first, e.second) + " lies in " +
                                std::to_string(fs.size()) + " faces");

  // Vertex links: every link must be one simple cycle through all neighbors.
  std::vector<std::vector<int>> nbr(n);
  for (const auto& [e, fs] : edge_faces) {
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  for (int v = 0; v < n; ++v) {
    if (nbr[v].empty()) fail(Err::NotASphere, "vertex " + std::to_string(v) + " in no face");
    std::sort(nbr[v].begin(), nbr[v].end());
  }

  // Link edges per vertex, from faces.
  std::vector<std::map<int, std::vector<int>>> link(n);
  for (const auto& f : faces) {
    link[f[0]][f[1]].push_back(f[2]);
    link[f[0]][f[2]].push_back(f[1]);
    link[f[1]][f[0]].push_back(f[2]);
    link[f[1]][f[2]].push_back(f[0]);
    link[f[2]][f[0]].push_back(f[1]);
    link[f[2]][f[1]].push_back(f[0]);
  }
  for (int v = 0; v < n; ++v) {
    if (nbr[v].size() < 3)
      fail(Err::NotASphere, "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(nbr[v].size()));
    for (int u : nbr[v])
      if (link[v][u].size() != 2)
        fail(Err::NotASphere, "link of vertex " + std::to_string(v) +
                                  " is not a simple cycle at neighbor " +
                                  std::to_string(u));
    // Walk the link starting anywhere; it must close after visiting every
    // neighbor exactly once.
    int start = nbr[v][0];
    int prev = start;
    int cur = link[v][start][0];
    size_t steps = 1;
    while (cur != start) {
      const auto& next2 = link[v][cur];
      int nxt = (next2[0] == prev) ? next2[1] : next2[0];
      prev = cur;
      cur = nxt;
      if (++steps > nbr[v].size())
        fail(Err::NotASphere, "link of vertex " + std::to_string(v) +
                                  " is not a single cycle");
    }
    if (steps != nbr[v].size())
      fail(Err::NotASphere, "link of vertex " + std::to_string(v) +
                                " is not a single cycle");
  }

  // Connectivity.
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : nbr[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n) fail(Err::NotASphere, "adjacency graph is disconnected");
  }

  // Orient faces consistently (each edge traversed once in each direction).
  // The checks above force a closed surface with Euler characteristic 2,
  // i.e. a sphere, so propagation cannot fail on accepted input.
  std::vector<std::array<int, 3>> oriented(faces.size());
  {
    std::map<std::pair<int, int>, int> dir_claimed;  // directed edge -> face
    std::vector<char> done(faces.size(), 0);
    std::vector<int> queue;
    auto face_adj = [&](int fi) {
      std::vector<int> out;
      const auto& f = faces[fi];
      for (auto [a, b] : {std::pair{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}})
        for (int g : edge_faces[{a, b}])
          if (g != fi) out.push_back(g);
      return out;
    };
    oriented[0] = faces[0];
    done[0] = 1;
    queue.push_back(0);
    auto claim = [&](int fi) {
      const auto& o = oriented[fi];
      for (int t = 0; t < 3; ++t) {
        auto key = std::pair{o[t], o[(t + 1) % 3]};
        auto [it, fresh] = dir_claimed.emplace(key, fi);
        if (!fresh)
          fail(Err::NotASphere, "orientation conflict at edge " +
                                    edge_str(key.first, key.second));
      }
    };
    claim(0);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int fi = queue[qi];
      for (int g : face_adj(fi)) {
        if (done[g]) continue;
        // Shared edge must be traversed oppositely in g.
        const auto& f = faces[g];
        std::array<int, 3> o = f;
        bool flipped = false;
        for (int t = 0; t < 3 && !flipped; ++t) {
          int a = o[t], b = o[(t + 1) % 3];
          auto it = dir_claimed.find({a, b});
          if (it != dir_claimed.end() && it->second == fi) {
            std::swap(o[1], o[2]);
            flipped = true;
          }
        }
        oriented[g] = o;
        done[g] = 1;
        claim(g);
        queue.push_back(g);
      }
    }
  }

  // Rotation system: around v, successor of a is b for oriented corner
  // (v, a, b).
  std::vector<std::map<int, int>> succ(n);
  for (const auto& o : oriented) {
    succ[o[0]][o[1]] = o[2];
    succ[o[1]][o[2]] = o[0];
    succ[o[2]][o[0]] = o[1];
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    int start = nbr[v][0];
    int cur = start;
    do {
      rot[v].push_back(cur);
      cur = succ[v][cur];
    } while (cur != start && rot[v].size() <= nbr[v].size());
    if (rot[v].size() != nbr[v].size())
      fail(Err::NotASphere, "rotation around vertex " + std::to_string(v) +
                                " does not close");
  }

  Triangulation t;
  t.n_ = n;
  t.faces_ = std::move(faces);
  t.nbr_ = std::move(nbr);
  t.rot_ = std::move(rot);
  if (n <= 64) {
    t.adj_mask_.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u : t.nbr_[v]) t.adj_mask_[v] |= std::uint64_t{1} << u;
  }
  return t;
}

bool Triangulation::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(nbr_[u].begin(), nbr_[u].end(), v);
}

bool Triangulation::has_face(int a, int b, int c) const {
  std::array<int, 3> f{a, b, c};
  std::sort(f.begin(), f.end());
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

const std::vector<std::uint64_t>& Triangulation::adjacency_masks() const {
  if (adj_mask_.empty())
    fail(Err::CapExceeded, "bitmask kernels need n <= 64, have n=" +
                               std::to_string(n_));
  return adj_mask_;
}

int induced_component_count(const Triangulation& t, std::span<const int> w) {
  if (w.empty()) return 0;
  std::vector<char> in(t.vertex_count(), 0), seen(t.vertex_count(), 0);
  for (int v : w) in[v] = 1;
  int cc = 0;
  std::vector<int> stack;
  for (int s : w) {
    if (seen[s]) continue;
    ++cc;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : t.neighbors(v))
        if (in[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return cc;
}

std::array<int, 3> face_type(const Triangulation& t, std::array<int, 3> face) {
  std::sort(face.begin(), face.end());
  if (!t.has_face(face[0], face[1], face[2]))
    fail(Err::FaceNotPresent, triple_str(face) + " is not a face");
  std::array<int, 3> d{t.degree(face[0]), t.degree(face[1]), t.degree(face[2])};
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

const char* symmetry_class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kRegular: return "regular";
    case SymmetryClass::kFaceTransitiveNotRegular:
      return "face-transitive-not-regular";
    case SymmetryClass::kNotFaceTransitive: return "not-face-transitive";
  }
  return "?";
}

SymmetryClass symmetry_class(const Triangulation& t) {
  std::set<std::array<int, 3>> types;
  for (const auto& f : t.faces()) types.insert(face_type(t, f));
  if (types.size() != 1) return SymmetryClass::kNotFaceTransitive;
  const auto& ty = *types.begin();
  return (ty[0] == ty[2]) ? SymmetryClass::kRegular
                          : SymmetryClass::kFaceTransitiveNotRegular;
}

}  // namespace trisph
