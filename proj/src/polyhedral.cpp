#include "trisph/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace trisph {
namespace {

std::string cycle_str(const std::vector<int>& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

// Rotate cycle so its smallest vertex comes first (cyclic order preserved).
std::vector<int> rotate_min_first(const std::vector<int>& c) {
  size_t at = std::min_element(c.begin(), c.end()) - c.begin();
  std::vector<int> out;
  out.reserve(c.size());
  for (size_t i = 0; i < c.size(); ++i) out.push_back(c[(at + i) % c.size()]);
  return out;
}

std::vector<std::vector<int>> normalize_faces(std::vector<std::vector<int>> fs) {
  for (auto& f : fs) f = rotate_min_first(f);
  std::sort(fs.begin(), fs.end());
  return fs;
}

}  // namespace

PolyhedralSphere PolyhedralSphere::build(std::vector<std::vector<int>> face_cycles) {
  if (face_cycles.empty()) fail(Err::NotASphere, "no faces");

  int n = 0;
  for (const auto& c : face_cycles) {
    if (c.size() < 3)
      fail(Err::MalformedFace, "face cycle " + cycle_str(c) + " shorter than 3");
    std::set<int> distinct;
    for (int v : c) {
      if (v < 0)
        fail(Err::MalformedFace, "negative vertex id in " + cycle_str(c));
      if (!distinct.insert(v).second)
        fail(Err::MalformedFace, "repeated vertex in face cycle " + cycle_str(c));
      n = std::max(n, v + 1);
    }
  }
  if (n < 4) fail(Err::NotASphere, "fewer than 4 vertices");

  const int fcount = static_cast<int>(face_cycles.size());

  // Undirected edge -> incident faces.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int fi = 0; fi < fcount; ++fi) {
    const auto& c = face_cycles[fi];
    for (size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(fi);
    }
  }
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() != 2)
      fail(Err::NotASphere, "edge {" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + "} lies in " +
                                std::to_string(fs.size()) + " face cycles");
  const int ecount = static_cast<int>(edge_faces.size());
  if (n - ecount + fcount != 2)
    fail(Err::NotASphere, "V-E+F = " + std::to_string(n - ecount + fcount) +
                              ", expected 2");

  // Orient cycles consistently: flip faces during a BFS over face adjacency
  // so every edge ends up traversed once in each direction.
  std::vector<char> flip(fcount, 0), done(fcount, 0);
  {
    std::vector<int> queue{0};
    done[0] = 1;
    auto directed_in = [&](int fi, int a, int b) {
      // True if face fi (after its flip flag) traverses a->b.
      const auto& c = face_cycles[fi];
      for (size_t i = 0; i < c.size(); ++i) {
        int x = c[i], y = c[(i + 1) % c.size()];
        if (flip[fi]) std::swap(x, y);
        if (x == a && y == b) return true;
      }
      return false;
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int fi = queue[qi];
      const auto& c = face_cycles[fi];
      for (size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        if (flip[fi]) std::swap(a, b);  // fi traverses a->b
        const auto& fs = edge_faces[{std::min(a, b), std::max(a, b)}];
        int g = (fs[0] == fi) ? fs[1] : fs[0];
        if (g == fi)
          fail(Err::NotASphere, "edge repeated inside one face cycle");
        if (!done[g]) {
          if (directed_in(g, a, b)) flip[g] = 1;  // must traverse b->a
          done[g] = 1;
          queue.push_back(g);
        } else if (directed_in(g, a, b)) {
          fail(Err::NotASphere, "face cycles cannot be consistently oriented");
        }
      }
    }
    if (std::find(done.begin(), done.end(), 0) != done.end())
      fail(Err::NotASphere, "face structure is disconnected");
  }
  for (int fi = 0; fi < fcount; ++fi)
    if (flip[fi])
      std::reverse(face_cycles[fi].begin(), face_cycles[fi].end());

  // Of the two global orientations keep the lexicographically smaller
  // normalized face list, so construction is reproducible byte for byte.
  auto fwd = normalize_faces(face_cycles);
  auto mirrored = face_cycles;
  for (auto& f : mirrored) std::reverse(f.begin(), f.end());
  auto bwd = normalize_faces(std::move(mirrored));
  std::vector<std::vector<int>> faces = std::min(fwd, bwd);

  // Rotation around v: for oriented face (..., p, v, s, ...), the rotation
  // successor of s at v is p.  Orbits must close through every neighbor.
  std::vector<std::map<int, int>> succ(n);
  std::vector<std::set<int>> nbr(n);
  for (const auto& c : faces) {
    const size_t s = c.size();
    for (size_t i = 0; i < s; ++i) {
      int prev = c[(i + s - 1) % s], v = c[i], next = c[(i + 1) % s];
      auto [it, fresh] = succ[v].emplace(next, prev);
      if (!fresh) fail(Err::NotASphere, "conflicting corners at vertex " +
                                            std::to_string(v));
      nbr[v].insert(prev);
      nbr[v].insert(next);
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (nbr[v].size() < 3)
      fail(Err::NotASphere, "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(nbr[v].size()));
    int start = *nbr[v].begin();
    int cur = start;
    do {
      rot[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end())
        fail(Err::NotASphere, "link of vertex " + std::to_string(v) +
                                  " is not a single cycle");
      cur = it->second;
    } while (cur != start && rot[v].size() <= nbr[v].size());
    if (rot[v].size() != nbr[v].size())
      fail(Err::NotASphere, "link of vertex " + std::to_string(v) +
                                " is not a single cycle");
  }

  // Graph connectivity (face-connectivity was established above, but a
  // vertex appearing in no face would have been caught by degree >= 3).
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : rot[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n) fail(Err::NotASphere, "adjacency graph is disconnected");
  }

  PolyhedralSphere p;
  p.n_ = n;
  p.e_ = ecount;
  p.faces_ = std::move(faces);
  p.rot_ = std::move(rot);
  return p;
}

PolyhedralSphere PolyhedralSphere::from_triangulation(const Triangulation& t) {
  std::vector<std::vector<int>> cycles;
  cycles.reserve(t.faces().size());
  for (const auto& f : t.faces()) cycles.push_back({f[0], f[1], f[2]});
  return build(std::move(cycles));
}

bool PolyhedralSphere::all_triangles() const {
  return std::all_of(faces_.begin(), faces_.end(),
                     [](const auto& f) { return f.size() == 3; });
}

Triangulation PolyhedralSphere::to_triangulation() const {
  std::vector<std::array<int, 3>> fs;
  fs.reserve(faces_.size());
  for (const auto& f : faces_) {
    if (f.size() != 3)
      fail(Err::MalformedFace, "face cycle of length " +
                                   std::to_string(f.size()) +
                                   " cannot enter a triangulation");
    fs.push_back({f[0], f[1], f[2]});
  }
  return Triangulation::build(std::move(fs));
}

PolyhedralSphere dual(const PolyhedralSphere& p) {
  const int fcount = p.face_count();
  // Directed edge (a,b) -> index of the face traversing a->b.
  std::map<std::pair<int, int>, int> face_of;
  for (int fi = 0; fi < fcount; ++fi) {
    const auto& c = p.faces()[fi];
    for (size_t i = 0; i < c.size(); ++i)
      face_of[{c[i], c[(i + 1) % c.size()]}] = fi;
  }
  // Lowest-indexed face containing each vertex, for a deterministic start.
  std::vector<int> first_face(p.vertex_count(), -1);
  for (int fi = fcount - 1; fi >= 0; --fi)
    for (int v : p.faces()[fi]) first_face[v] = fi;

  std::vector<std::vector<int>> dual_faces(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) {
    int fi = first_face[v];
    do {
      dual_faces[v].push_back(fi);
      const auto& c = p.faces()[fi];
      size_t at = std::find(c.begin(), c.end(), v) - c.begin();
      int s = c[(at + 1) % c.size()];  // v -> s inside fi
      fi = face_of.at({s, v});         // neighbor across edge {v, s}
    } while (fi != first_face[v]);
  }
  return PolyhedralSphere::build(std::move(dual_faces));
}

PolyhedralSphere dual(const Triangulation& t) {
  return dual(PolyhedralSphere::from_triangulation(t));
}

}  // namespace trisph
