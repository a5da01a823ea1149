#include "trisph/canonical.hpp"

#include <algorithm>

#include "trisph/polyhedral.hpp"

namespace trisph {

namespace {

const char kHexDigits[] = "0123456789abcdef";

// Emits the traversal code for start edge (u, v), walking each rotation in
// direction dir (+1/-1).  Aborts as soon as the candidate is known to be
// lexicographically >= best; returns true iff it is strictly smaller (best
// empty counts as larger than everything).
bool encode(int n, const std::vector<std::vector<int>>& rot, int u, int v,
            int dir, const std::string& best, std::string& out) {
  out.clear();
  bool undecided = !best.empty();  // still equal to best's prefix
  auto push = [&](unsigned char c) {
    if (undecided) {
      const size_t pos = out.size();
      const unsigned char bc = static_cast<unsigned char>(best[pos]);
      if (c > bc) return false;
      if (c < bc) undecided = false;
    }
    out.push_back(static_cast<char>(c));
    return true;
  };

  if (!push(static_cast<unsigned char>(n))) return false;

  std::vector<int> label(n, -1), entry(n, -1), order;
  order.reserve(n);
  label[u] = 0;
  entry[u] = v;
  order.push_back(u);
  label[v] = 1;
  entry[v] = u;
  order.push_back(v);
  int next = 2;

  for (int t = 0; t < n; ++t) {
    const int x = order[t];
    const auto& r = rot[x];
    const int d = static_cast<int>(r.size());
    int at = 0;
    while (r[at] != entry[x]) ++at;
    for (int s = 0; s < d; ++s) {
      const int w = r[((at + dir * s) % d + d) % d];
      if (label[w] < 0) {
        label[w] = next++;
        entry[w] = x;
        order.push_back(w);
      }
      if (!push(static_cast<unsigned char>(label[w] + 1))) return false;
    }
    if (!push(0)) return false;
  }
  // All candidates of one map have length 1 + 2E + n, so an undecided full
  // run means the candidate equals best.
  return !undecided;
}

}  // namespace

std::string CanonicalCode::hex() const {
  std::string h;
  h.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    h.push_back(kHexDigits[c >> 4]);
    h.push_back(kHexDigits[c & 15]);
  }
  return h;
}

CanonicalCode CanonicalCode::from_hex(const std::string& h) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (h.size() % 2 != 0) fail(Err::CorruptDatabase, "odd hex code length");
  CanonicalCode code;
  code.bytes.reserve(h.size() / 2);
  for (size_t i = 0; i < h.size(); i += 2) {
    int hi = nib(h[i]), lo = nib(h[i + 1]);
    if (hi < 0 || lo < 0) fail(Err::CorruptDatabase, "bad hex code digit");
    code.bytes.push_back(static_cast<char>((hi << 4) | lo));
  }
  return code;
}

namespace detail {

CanonicalCode map_code(int n, const std::vector<std::vector<int>>& rot) {
  if (n < 1 || n > 255) fail(Err::CapExceeded, "map code needs 1 <= n <= 255");
  std::string best, cand;
  for (int u = 0; u < n; ++u)
    for (int v : rot[u])
      for (int dir : {+1, -1})
        if (encode(n, rot, u, v, dir, best, cand)) best.swap(cand);
  return CanonicalCode{std::move(best)};
}

}  // namespace detail

CanonicalCode canonical_code(const Triangulation& t) {
  std::vector<std::vector<int>> rot(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) rot[v] = t.rotation(v);
  return detail::map_code(t.vertex_count(), rot);
}

CanonicalCode canonical_code(const PolyhedralSphere& p) {
  return detail::map_code(p.vertex_count(), p.rotation());
}

bool are_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

bool are_isomorphic(const PolyhedralSphere& a, const PolyhedralSphere& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace trisph
