#pragma once

#include <map>
#include <string>
#include <vector>

#include "trisph/betti.hpp"
#include "trisph/canonical.hpp"
#include "trisph/triangulation.hpp"

namespace trisph {

// One census entry.  The stored fields satisfy, and load() re-checks:
//   code identifies n vertices; b has n+1 entries with b[0] = -1, b[1] = 0,
//   b[2] = C(n,2)-(3n-6), zero tail; belt3 = b[n-3]; irreducible iff
//   belt3 = 0; for irreducible records with n >= 5, belt4 = b[n-4];
//   leaves is sorted and has b[n-3]+1 entries.
struct CensusRecord {
  CanonicalCode code;
  int n = 0;
  BettiVector betti;
  long long belt3 = 0, belt4 = 0;
  bool irreducible = false;
  std::vector<CanonicalCode> leaves;

  bool operator==(const CensusRecord&) const = default;
};

struct CensusDatabase {
  // Keyed by vertex count; each level sorted by canonical code.
  std::map<int, std::vector<CensusRecord>> levels;

  bool has_level(int n) const { return levels.count(n) != 0; }
  const std::vector<CensusRecord>& level(int n) const;  // IncompleteCensus
  bool operator==(const CensusDatabase&) const = default;
};

struct EnumerateOptions {
  int cap = 13;
  int threads = 1;
};

// All isomorphism classes on exactly n vertices, sorted by canonical code.
// Every triangulation except the tetrahedron arises from an (n-1)-vertex
// one by a vertex split, so the levels are grown bottom-up from n = 4 and
// deduplicated by canonical code.  Throws CapExceeded past opts.cap.
std::vector<Triangulation> enumerate_triangulations(
    int n, const EnumerateOptions& opts = {});

// Levels 4..n in one pass; each level as enumerate_triangulations gives it.
std::map<int, std::vector<Triangulation>> enumerate_levels(
    int n, const EnumerateOptions& opts = {});

// Independent brute force for n <= 8: backtracking over labeled face sets
// (always completing the lexicographically least open edge), validating
// each completion and deduplicating by canonical code.  Shares no code
// path with enumerate_triangulations beyond validation itself.
std::vector<Triangulation> enumerate_oracle(int n);

CensusRecord make_record(const Triangulation& t);

// Levels 4..n_hi with full records.
CensusDatabase build_census(int n_hi, const EnumerateOptions& opts = {});

// Members of one level grouped by their full Betti vector; a member is
// rigid exactly when it is alone in its class.
struct RigidityReport {
  int n = 0;
  // Each class sorted by code; classes sorted by their first member.
  std::vector<std::vector<CanonicalCode>> classes;
  std::vector<CanonicalCode> rigid_codes;  // sorted

  bool is_rigid(const CanonicalCode& c) const;
};
RigidityReport classify_rigidity(const CensusDatabase& db, int n);

struct VerificationClaim {
  std::string id;
  int n_lo = 0, n_hi = 0;
  bool verified = false;
  long long checked = 0;  // instances examined
  std::string detail;     // witness data on failure, or summary notes
};

struct VerificationReport {
  std::vector<VerificationClaim> claims;
  bool all_verified() const;
};

// Exhaustive checks of the structural theorems over db levels n_lo..n_hi.
// The levels are independently re-enumerated and compared with db first;
// any mismatch throws IncompleteCensus.  Claims are fail-soft: a violated
// claim is reported with witnesses instead of aborting.  Claim ids:
//   irreducible-counts          per-level irreducible counts vs the known
//                               list for n <= 9
//   irreducible-bn4-multisets   b_{n-4} multisets over irreducibles, n <= 8
//   n9-bn4-report               n = 9 multiset vs the published list
//                               {14,12,8,6,3}, reported as signed deltas
//   max-bn4-bipyramid           max b_{n-4} over irreducibles = bound_f(n),
//                               attained only by the bipyramid (or T4)
//   second-max-semibipyramid    remaining irreducibles stay within
//                               bound_second(n); equality only at the
//                               semi-bipyramid
//   leaf-count-betti            leaf count = b_{n-3} + 1 on every record
//   multiway-bound-equality     reducible members respect bound_multi with
//                               equality exactly at bipyramid-plus-
//                               tetrahedra leaf patterns
//   rigid-implies-unique-sum    every 3-belt split of a rigid reducible
//                               member sums back to a single class
//   three-summands-not-rigid    members with >= 3 leaves are non-rigid,
//                               except the triple tetrahedron sum
//   unique-sum-face-transitivity  irreducible pairs with a single sum
//                               class pair a regular with a face-
//                               transitive polytope (pair sizes <= 18)
//   named-rigid-polytopes       the named rigid families within range are
//                               rigid in the census
//   rigid-reducible-family      every rigid reducible member matches the
//                               two-summand generator family (or is the
//                               triple tetrahedron sum)
VerificationReport verify_theorems(const CensusDatabase& db, int n_lo,
                                   int n_hi, int threads = 1);

// Text serialization: one `n=.. code=.. b=.. belts3=.. belts4=.. irred=..
// leaves=..` line per record, sorted by (n, code), then `checksum=<hex>`
// (FNV-1a 64 over the preceding bytes).  load re-validates everything and
// throws CorruptDatabase on any checksum, syntax, or invariant failure.
std::string save_census(const CensusDatabase& db);
void save_census(const CensusDatabase& db, const std::string& path);
CensusDatabase load_census_text(const std::string& text);
CensusDatabase load_census(const std::string& path);

}  // namespace trisph
