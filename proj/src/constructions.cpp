#include "trisph/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "trisph/errors.hpp"

namespace trisph {

Triangulation tetrahedron() {
  return Triangulation::build({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Triangulation octahedron() {
  std::vector<std::array<int, 3>> f;
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    f.push_back({i, j, 4});
    f.push_back({i, j, 5});
  }
  return Triangulation::build(f);
}

Triangulation icosahedron() {
  std::vector<std::array<int, 3>> f;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, un = 1 + (i + 1) % 5;       // upper ring
    int l = 6 + i, ln = 6 + (i + 1) % 5;       // lower ring
    f.push_back({0, u, un});                   // cap at the north pole
    f.push_back({u, un, l});                   // downward triangle
    f.push_back({un, l, ln});                  // upward triangle
    f.push_back({l, ln, 11});                  // cap at the south pole
  }
  return Triangulation::build(f);
}

PolyhedralSphere cube() { return dual(octahedron()); }

PolyhedralSphere dodecahedron() { return dual(icosahedron()); }

Triangulation bipyramid(int n) {
  if (n < 5) fail(Err::OutOfRange, "bipyramid needs n >= 5");
  int m = n - 2;
  std::vector<std::array<int, 3>> f;
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    f.push_back({i, j, n - 2});
    f.push_back({i, j, n - 1});
  }
  return Triangulation::build(f);
}

PolyhedralSphere prism(int k) {
  if (k < 3) fail(Err::OutOfRange, "prism needs k >= 3");
  std::vector<std::vector<int>> f;
  std::vector<int> bot(k), top(k);
  for (int i = 0; i < k; ++i) bot[i] = i, top[i] = k + i;
  f.push_back(bot);
  f.push_back(top);
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    f.push_back({i, j, k + j, k + i});
  }
  return PolyhedralSphere::build(f);
}

PolyhedralSphere edge_cut_prism(int k) {
  if (k < 3) fail(Err::OutOfRange, "edge_cut_prism needs k >= 3");
  // Bottom 0..k-1, top k..2k-1; the cut edge is the top edge {k, k+1}.
  // New vertices: p = 2k on the vertical under k, q = 2k+1 under k+1.
  int p = 2 * k, q = 2 * k + 1;
  std::vector<std::vector<int>> f;
  std::vector<int> bot(k), top(k);
  for (int i = 0; i < k; ++i) bot[i] = i, top[i] = k + i;
  f.push_back(bot);
  f.push_back(top);
  f.push_back({k, k + 1, q, p});      // the new quadrilateral
  f.push_back({0, 1, q, p});          // side under the cut, now a quad
  f.push_back({1, 2, k + 2, k + 1, q});        // pentagon right of the cut
  f.push_back({k - 1, 0, p, k, 2 * k - 1});    // pentagon left of the cut
  for (int i = 2; i <= k - 2; ++i) {           // untouched side quads
    int j = i + 1;
    f.push_back({i, j, k + j, k + i});
  }
  return PolyhedralSphere::build(f);
}

Triangulation semi_bipyramid(int n) {
  if (n < 8) fail(Err::OutOfRange, "semi_bipyramid needs n >= 8");
  int m = n - 3;             // ring length of the underlying bipyramid
  int x = n - 3, y = n - 2;  // apexes; y keeps its full ring of faces
  int z = n - 1;             // the new degree-4 vertex replacing edge {x,0}
  std::vector<std::array<int, 3>> f;
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    f.push_back({i, j, y});
    if (i != 0 && i != m - 1) f.push_back({i, j, x});
  }
  f.push_back({0, 1, z});
  f.push_back({1, x, z});
  f.push_back({m - 1, 0, z});
  f.push_back({m - 1, x, z});
  return Triangulation::build(f);
}

namespace {

Triangulation cone_faces(const PolyhedralSphere& p) {
  int n = p.vertex_count();
  std::vector<std::array<int, 3>> out;
  const auto& fs = p.faces();
  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
    const auto& cyc = fs[fi];
    int c = n + fi;
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) out.push_back({cyc[i], cyc[(i + 1) % k], c});
  }
  return Triangulation::build(out);
}

}  // namespace

Triangulation subdivide_first(const PolyhedralSphere& p) {
  return cone_faces(p);
}

Triangulation subdivide_second(const PolyhedralSphere& p) {
  int n = p.vertex_count();
  std::map<std::pair<int, int>, int> mid;
  for (const auto& cyc : p.faces()) {
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % k];
      mid.emplace(std::minmax(a, b), 0);
    }
  }
  int next = n;
  for (auto& [e, id] : mid) id = next++;
  std::vector<std::array<int, 3>> out;
  const auto& fs = p.faces();
  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
    const auto& cyc = fs[fi];
    int c = n + static_cast<int>(mid.size()) + fi;
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % k];
      int mab = mid.at(std::minmax(a, b));
      out.push_back({a, mab, c});
      out.push_back({mab, b, c});
    }
  }
  return Triangulation::build(out);
}

Triangulation subdivide_first(const Triangulation& t) {
  return subdivide_first(PolyhedralSphere::from_triangulation(t));
}

Triangulation subdivide_second(const Triangulation& t) {
  return subdivide_second(PolyhedralSphere::from_triangulation(t));
}

Triangulation vertex_split(const Triangulation& t, int v, int i, int j) {
  int n = t.vertex_count();
  if (v < 0 || v >= n) fail(Err::InvalidSplit, "vertex out of range");
  const auto& rot = t.rotation(v);
  int d = static_cast<int>(rot.size());
  if (!(0 <= i && i < j && j < d))
    fail(Err::InvalidSplit, "need 0 <= i < j < deg(v)");
  // Arc kept by v: rot[i..j] inclusive.  Arc moved to the new vertex
  // w = n: rot[j..i] inclusive (wrapping).  Both arcs must have at least
  // two vertices so each copy keeps degree >= 3 after gaining the other;
  // that is j > i and (i + d) > j, i.e. j - i < d, already implied.
  int w = n;
  std::vector<std::array<int, 3>> out;
  for (const auto& f : t.faces()) {
    if (f[0] != v && f[1] != v && f[2] != v) {
      out.push_back(f);
      continue;
    }
    int a = -1, b = -1;
    for (int s = 0; s < 3; ++s)
      if (f[s] != v) (a < 0 ? a : b) = f[s];
    // The face sits in the rotation gap pa -> pa+1 (mod d).
    int pa = -1, pb = -1;
    for (int s = 0; s < d; ++s) {
      if (rot[s] == a) pa = s;
      if (rot[s] == b) pb = s;
    }
    if ((pa + 1) % d != pb) std::swap(pa, pb);
    // The kept arc rot[i..j] covers the gaps i..j-1; every other gap,
    // including the wrapping one, belongs to the complementary arc.
    if (i <= pa && pa < j) {
      out.push_back(f);
    } else {
      std::array<int, 3> g = f;
      for (int s = 0; s < 3; ++s)
        if (g[s] == v) g[s] = w;
      out.push_back(g);
    }
  }
  out.push_back({v, w, rot[i]});
  out.push_back({v, w, rot[j]});
  return Triangulation::build(out);
}

std::vector<GeneratorPair> necessary_family(int max_bipyramid) {
  if (max_bipyramid < 7)
    fail(Err::OutOfRange, "need max_bipyramid >= 7");
  struct Named {
    std::string name;
    Triangulation t;
  };
  std::vector<Named> regulars = {
      {"T4", tetrahedron()}, {"O6", octahedron()}, {"I12", icosahedron()}};
  std::vector<Named> others = {
      {"xi1(C8)", subdivide_first(cube())},
      {"xi2(C8)", subdivide_second(cube())},
      {"xi1(D20)", subdivide_first(dodecahedron())},
      {"xi2(D20)", subdivide_second(dodecahedron())}};
  for (int n = 7; n <= max_bipyramid; ++n)
    others.push_back({"B" + std::to_string(n), bipyramid(n)});

  std::vector<GeneratorPair> out;
  for (size_t a = 0; a < regulars.size(); ++a) {
    for (size_t b = a; b < regulars.size(); ++b)
      out.push_back({regulars[a].name, regulars[b].name, regulars[a].t,
                     regulars[b].t});
    for (const auto& o : others)
      out.push_back({regulars[a].name, o.name, regulars[a].t, o.t});
  }
  return out;
}

}  // namespace trisph
