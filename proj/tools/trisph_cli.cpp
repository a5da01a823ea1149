// Command-line driver: every subcommand reads the polytope text format on
// stdin unless --in names a file, writes deterministic text, and switches
// to a machine-readable report with --json.  Exit codes: 0 success, 1
// domain error, 2 usage error.
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trisph/belts.hpp"
#include "trisph/betti.hpp"
#include "trisph/canonical.hpp"
#include "trisph/census.hpp"
#include "trisph/constructions.hpp"
#include "trisph/errors.hpp"
#include "trisph/hochster.hpp"
#include "trisph/io.hpp"
#include "trisph/polyhedral.hpp"
#include "trisph/surgery.hpp"
#include "trisph/triangulation.hpp"

namespace {

using nlohmann::json;
using namespace trisph;

PolytopeFile load_poly(const std::string& path) {
  if (path.empty() || path == "-") return read_polytope(std::cin);
  std::ifstream f(path);
  if (!f) fail(Err::MalformedFace, "cannot open " + path);
  return read_polytope(f);
}

Triangulation load_tri(const std::string& path) {
  if (path.empty() || path == "-") return read_triangulation(std::cin);
  std::ifstream f(path);
  if (!f) fail(Err::MalformedFace, "cannot open " + path);
  return read_triangulation(f);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Err::MalformedFace, "cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) fail(Err::MalformedFace, "short write to " + path);
}

int parse_param(const std::string& s, const std::string& name) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(Err::UnknownName, "bad parameter in '" + name + "'");
  return v;
}

// T4 O6 I12 C8 D20 bipyramid:n semibipyramid:n prism:k edgecutprism:k
// xi1:NAME xi2:NAME (NAME may itself be parameterized, e.g. xi1:prism:5).
PolytopeFile make_named(const std::string& name) {
  auto colon = name.find(':');
  std::string head = colon == std::string::npos ? name : name.substr(0, colon);
  std::string rest =
      colon == std::string::npos ? std::string() : name.substr(colon + 1);
  auto no_param = [&] {
    if (colon != std::string::npos)
      fail(Err::UnknownName, "'" + head + "' takes no parameter");
  };
  if (head == "T4") {
    no_param();
    return PolytopeFile{tetrahedron()};
  }
  if (head == "O6") {
    no_param();
    return PolytopeFile{octahedron()};
  }
  if (head == "I12") {
    no_param();
    return PolytopeFile{icosahedron()};
  }
  if (head == "C8") {
    no_param();
    return PolytopeFile{cube()};
  }
  if (head == "D20") {
    no_param();
    return PolytopeFile{dodecahedron()};
  }
  auto need_param = [&]() -> const std::string& {
    if (colon == std::string::npos || rest.empty())
      fail(Err::UnknownName, "'" + head + "' needs a parameter");
    return rest;
  };
  if (head == "bipyramid")
    return PolytopeFile{bipyramid(parse_param(need_param(), name))};
  if (head == "semibipyramid")
    return PolytopeFile{semi_bipyramid(parse_param(need_param(), name))};
  if (head == "prism")
    return PolytopeFile{prism(parse_param(need_param(), name))};
  if (head == "edgecutprism")
    return PolytopeFile{edge_cut_prism(parse_param(need_param(), name))};
  if (head == "xi1" || head == "xi2") {
    PolytopeFile base = make_named(need_param());
    bool first = head == "xi1";
    auto sub = [first](const auto& v) {
      return first ? subdivide_first(v) : subdivide_second(v);
    };
    return PolytopeFile{std::visit(sub, base.value)};
  }
  fail(Err::UnknownName, "unknown construction '" + name + "'");
}

std::string poly_text(const PolytopeFile& p) {
  std::ostringstream out;
  if (p.is_triangulation())
    write_polytope(out, p.triangulation());
  else
    write_polytope(out, p.polyhedral());
  return out.str();
}

std::string csv(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of triangulated 2-spheres"};
  app.require_subcommand(1);

  std::string in = "-", in_b, out = "-", db_path, name;
  bool as_json = false, all_classes = false, profile = false;
  int threads = 1, belt_k = 3, level_n = 0, n_lo = 4, n_hi = 0, cap = 13;
  long long characteristic = -1;
  std::vector<std::string> claim_filter;

  auto* validate = app.add_subcommand("validate", "check a polytope file");
  validate->add_option("--in", in, "input file, - for stdin");
  validate->add_flag("--json", as_json, "machine-readable report");
  validate->callback([&] {
    PolytopeFile p = load_poly(in);
    std::string kind = p.is_triangulation() ? "triangulation" : "polyhedral";
    int n, e, f;
    if (p.is_triangulation()) {
      const Triangulation& t = p.triangulation();
      n = t.vertex_count(), e = t.edge_count(), f = t.face_count();
    } else {
      const PolyhedralSphere& s = p.polyhedral();
      n = s.vertex_count(), e = s.edge_count(), f = s.face_count();
    }
    if (as_json) {
      emit(json{{"kind", kind}, {"n", n}, {"edges", e}, {"faces", f}});
      return;
    }
    std::cout << "kind: " << kind << "\nn: " << n << "\nedges: " << e
              << "\nfaces: " << f << "\n";
  });

  auto* betti = app.add_subcommand("betti", "special graded Betti numbers");
  betti->add_option("--in", in, "input file, - for stdin");
  betti->add_option("--threads", threads, "worker threads");
  betti->add_flag("--json", as_json, "machine-readable report");
  betti->callback([&] {
    Triangulation t = load_tri(in);
    SweepOptions so;
    so.threads = threads;
    BettiVector v = betti_sweep(t, so);
    if (as_json) {
      emit(json{{"n", v.n}, {"b", v.b}});
      return;
    }
    std::cout << "b: " << csv(v.b) << "\n";
  });

  auto* table = app.add_subcommand("table", "graded Betti table");
  table->add_option("--in", in, "input file, - for stdin");
  table
      ->add_option("--characteristic", characteristic,
                   "rank computation field: 2 or 0 (0 uses the large prime); "
                   "default derives the table from one subset sweep")
      ->check(CLI::IsMember({0LL, 2LL, kCharZeroPrime}));
  table->add_flag("--json", as_json, "machine-readable report");
  table->callback([&] {
    Triangulation t = load_tri(in);
    GradedBettiTable g =
        characteristic < 0
            ? graded_table(t)
            : hochster_table(t,
                             characteristic == 0 ? kCharZeroPrime
                                                 : characteristic);
    std::string mode = characteristic < 0
                           ? "derived"
                           : std::to_string(characteristic == 0
                                                ? kCharZeroPrime
                                                : characteristic);
    if (as_json) {
      emit(json{{"n", g.n}, {"characteristic", mode}, {"beta", g.beta}});
      return;
    }
    std::cout << "n: " << g.n << "\ncharacteristic: " << mode << "\n";
    for (size_t i = 0; i < g.beta.size(); ++i)
      std::cout << "beta " << i << ": " << csv(g.beta[i]) << "\n";
  });

  auto* belts = app.add_subcommand("belts", "belts of one length");
  belts->add_option("--in", in, "input file, - for stdin");
  belts->add_option("--k", belt_k, "belt length")->check(CLI::Range(3, 255));
  belts->add_flag("--profile", profile, "counts for every k instead");
  belts->add_flag("--json", as_json, "machine-readable report");
  belts->callback([&] {
    Triangulation t = load_tri(in);
    if (profile) {
      auto prof = belt_profile(t);
      if (as_json) {
        json j;
        for (const auto& [k, c] : prof) j[std::to_string(k)] = c;
        emit(json{{"profile", j}});
        return;
      }
      for (const auto& [k, c] : prof)
        std::cout << "k=" << k << ": " << c << "\n";
      return;
    }
    auto found = find_belts(t, belt_k);
    if (as_json) {
      json arr = json::array();
      for (const auto& b : found) arr.push_back(b.vertices);
      emit(json{{"k", belt_k}, {"count", found.size()}, {"belts", arr}});
      return;
    }
    for (const auto& b : found) {
      std::cout << "belt k=" << belt_k << ":";
      for (int v : b.vertices) std::cout << " " << v;
      std::cout << "\n";
    }
    std::cout << "count: " << found.size() << "\n";
  });

  auto* decomp = app.add_subcommand("decompose", "irreducible summands");
  decomp->add_option("--in", in, "input file, - for stdin");
  decomp->add_flag("--json", as_json, "machine-readable report");
  decomp->callback([&] {
    Triangulation t = load_tri(in);
    DecompositionTree d = decompose(t);
    if (as_json) {
      json leaves = json::array(), splits = json::array();
      for (const auto& l : d.leaves) leaves.push_back(l.hex());
      for (const auto& s : d.splits) splits.push_back(s.belt);
      emit(json{{"leaf_count", d.leaves.size()},
                {"leaves", leaves},
                {"splits", splits}});
      return;
    }
    std::cout << "leaves: " << d.leaves.size() << "\n";
    for (const auto& l : d.leaves)
      std::cout << "leaf: " << l.hex() << " n=" << l.vertex_count() << "\n";
    for (const auto& s : d.splits)
      std::cout << "split: " << s.belt[0] << " " << s.belt[1] << " "
                << s.belt[2] << "\n";
  });

  auto* sum = app.add_subcommand("sum", "connected sums of two inputs");
  sum->add_option("--a", in, "first summand file, - for stdin");
  sum->add_option("--b", in_b, "second summand file")->required();
  sum->add_flag("--all", all_classes, "list every isomorphism class");
  sum->add_option("--out", out, "output file, - for stdout");
  sum->add_flag("--json", as_json, "machine-readable report");
  sum->callback([&] {
    Triangulation a = load_tri(in);
    Triangulation b = load_tri(in_b);
    auto sums = all_connected_sums(a, b);
    if (as_json) {
      json arr = json::array();
      for (const auto& s : sums) arr.push_back(canonical_code(s).hex());
      emit(json{{"count", sums.size()}, {"classes", arr}});
      return;
    }
    if (all_classes) {
      for (const auto& s : sums)
        std::cout << "class: " << canonical_code(s).hex() << "\n";
      std::cout << "count: " << sums.size() << "\n";
      return;
    }
    // the class with the least canonical code, as a polytope file
    write_out(out, poly_text(PolytopeFile{sums.front()}));
  });

  auto* construct = app.add_subcommand("construct", "build a named polytope");
  construct->add_option("name", name, "e.g. T4, C8, bipyramid:8, xi2:D20")
      ->required();
  construct->add_option("--out", out, "output file, - for stdout");
  construct->callback([&] { write_out(out, poly_text(make_named(name))); });

  auto* census = app.add_subcommand("census", "enumerate all spheres up to n");
  census->add_option("--n", level_n, "largest vertex count")->required();
  census->add_option("--threads", threads, "worker threads");
  census->add_option("--cap", cap, "enumeration size guard");
  census->add_option("--out", out,
                     "database file; with a real file the summary goes to "
                     "stdout, with - the database itself does");
  census->add_flag("--json", as_json, "machine-readable summary");
  census->callback([&] {
    EnumerateOptions eo;
    eo.cap = cap;
    eo.threads = threads;
    CensusDatabase db = build_census(level_n, eo);
    std::string text = save_census(db);
    write_out(out, text);
    if (out.empty() || out == "-") return;  // stdout already holds the db
    if (as_json) {
      json arr = json::array();
      for (const auto& [m, recs] : db.levels) {
        long long irr = 0;
        for (const auto& r : recs) irr += r.irreducible ? 1 : 0;
        arr.push_back(
            json{{"n", m}, {"classes", recs.size()}, {"irreducible", irr}});
      }
      emit(json{{"levels", arr}});
      return;
    }
    for (const auto& [m, recs] : db.levels) {
      long long irr = 0;
      for (const auto& r : recs) irr += r.irreducible ? 1 : 0;
      std::cout << "level " << m << ": " << recs.size() << " classes, " << irr
                << " irreducible\n";
    }
  });

  auto* rigidity = app.add_subcommand("rigidity", "Betti classes of a level");
  rigidity->add_option("--db", db_path, "census database file")->required();
  rigidity->add_option("--n", level_n, "vertex count")->required();
  rigidity->add_flag("--json", as_json, "machine-readable report");
  rigidity->callback([&] {
    CensusDatabase db = load_census(db_path);
    RigidityReport rep = classify_rigidity(db, level_n);
    if (as_json) {
      json classes = json::array(), rigid = json::array();
      for (const auto& cls : rep.classes) {
        json c = json::array();
        for (const auto& code : cls) c.push_back(code.hex());
        classes.push_back(c);
      }
      for (const auto& code : rep.rigid_codes) rigid.push_back(code.hex());
      emit(json{{"n", rep.n},
                {"class_count", rep.classes.size()},
                {"rigid_count", rep.rigid_codes.size()},
                {"classes", classes},
                {"rigid", rigid}});
      return;
    }
    std::cout << "n: " << rep.n << "\nclasses: " << rep.classes.size()
              << "\nrigid: " << rep.rigid_codes.size() << "\n";
    for (const auto& cls : rep.classes) {
      std::cout << "class:";
      for (const auto& code : cls) std::cout << " " << code.hex();
      std::cout << "\n";
    }
  });

  auto* verify = app.add_subcommand("verify", "check the structural claims");
  verify->add_option("--db", db_path, "census database file")->required();
  verify->add_option("--n-lo", n_lo, "lowest level");
  verify->add_option("--n-hi", n_hi, "highest level, default the database's");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--claims", claim_filter, "only report these claim ids")
      ->delimiter(',');
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->callback([&] {
    CensusDatabase db = load_census(db_path);
    if (db.levels.empty()) fail(Err::IncompleteCensus, "database is empty");
    int hi = n_hi > 0 ? n_hi : db.levels.rbegin()->first;
    VerificationReport rep = verify_theorems(db, n_lo, hi, threads);
    auto wanted = [&](const std::string& id) {
      if (claim_filter.empty()) return true;
      for (const auto& w : claim_filter)
        if (w == id) return true;
      return false;
    };
    bool all = true;
    if (as_json) {
      json arr = json::array();
      for (const auto& c : rep.claims) {
        if (!wanted(c.id)) continue;
        all = all && c.verified;
        arr.push_back(json{{"id", c.id},
                           {"n_lo", c.n_lo},
                           {"n_hi", c.n_hi},
                           {"verified", c.verified},
                           {"checked", c.checked},
                           {"detail", c.detail}});
      }
      emit(json{{"claims", arr}, {"all_verified", all}});
      return;
    }
    for (const auto& c : rep.claims) {
      if (!wanted(c.id)) continue;
      all = all && c.verified;
      std::cout << "claim " << c.id << ": " << (c.verified ? "ok" : "FAIL")
                << " range=" << c.n_lo << ".." << c.n_hi
                << " checked=" << c.checked;
      if (!c.detail.empty()) std::cout << " " << c.detail;
      std::cout << "\n";
    }
    std::cout << "all: " << (all ? "ok" : "FAIL") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
