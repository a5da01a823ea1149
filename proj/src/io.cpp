#include "trisph/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace trisph {

PolytopeFile read_polytope(std::istream& in) {
  std::optional<int> declared_n;
  std::vector<std::array<int, 3>> tri_faces;
  std::vector<std::vector<int>> cycles;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    const std::string where = " at line " + std::to_string(lineno);
    if (tag == "n") {
      int n;
      if (!(ls >> n)) fail(Err::MalformedFace, "bad n line" + where);
      if (declared_n) fail(Err::MalformedFace, "duplicate n line" + where);
      declared_n = n;
    } else if (tag == "f") {
      std::array<int, 3> f;
      if (!(ls >> f[0] >> f[1] >> f[2]))
        fail(Err::MalformedFace, "bad f line" + where);
      int extra;
      if (ls >> extra) fail(Err::MalformedFace, "f line has extra fields" + where);
      tri_faces.push_back(f);
    } else if (tag == "c") {
      std::vector<int> c;
      int v;
      while (ls >> v) c.push_back(v);
      if (!ls.eof()) fail(Err::MalformedFace, "bad c line" + where);
      cycles.push_back(std::move(c));
    } else {
      fail(Err::MalformedFace, "unknown directive '" + tag + "'" + where);
    }
  }
  if (!tri_faces.empty() && !cycles.empty())
    fail(Err::MalformedFace, "file mixes f and c lines");
  if (tri_faces.empty() && cycles.empty())
    fail(Err::MalformedFace, "file has no faces");

  auto check_n = [&declared_n](int built_n) {
    if (declared_n && *declared_n != built_n)
      fail(Err::MalformedFace, "declared n=" + std::to_string(*declared_n) +
                                   " but faces use " +
                                   std::to_string(built_n) + " vertices");
  };
  if (!tri_faces.empty()) {
    Triangulation t = Triangulation::build(std::move(tri_faces));
    check_n(t.vertex_count());
    return PolytopeFile{std::move(t)};
  }
  PolyhedralSphere p = PolyhedralSphere::build(std::move(cycles));
  check_n(p.vertex_count());
  return PolytopeFile{std::move(p)};
}

Triangulation read_triangulation(std::istream& in) {
  PolytopeFile f = read_polytope(in);
  if (f.is_triangulation()) return f.triangulation();
  return f.polyhedral().to_triangulation();
}

void write_polytope(std::ostream& out, const Triangulation& t) {
  out << "n " << t.vertex_count() << "\n";
  for (const auto& f : t.faces())
    out << "f " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

void write_polytope(std::ostream& out, const PolyhedralSphere& p) {
  out << "n " << p.vertex_count() << "\n";
  for (const auto& f : p.faces()) {
    out << "c";
    for (int v : f) out << " " << v;
    out << "\n";
  }
}

}  // namespace trisph
