#pragma once

// Independent reference checks used by the unit and acceptance tests. They
// work on plain vectors and share no code with the library.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Every symbol s in `symbols` occurs exactly twice, s positions apart; the
// positions in `holes` (1-based) hold 0 and nothing else does.
inline bool is_pairing(const std::vector<int>& seq, const std::vector<int>& symbols,
                       const std::vector<int>& holes) {
  std::map<int, std::vector<int>> at;
  for (std::size_t p = 0; p < seq.size(); ++p) at[seq[p]].push_back(static_cast<int>(p) + 1);
  std::vector<int> zeros = at.count(0) ? at[0] : std::vector<int>{};
  std::vector<int> want = holes;
  std::sort(want.begin(), want.end());
  if (zeros != want) return false;
  at.erase(0);
  if (at.size() != symbols.size()) return false;
  for (int s : symbols) {
    auto it = at.find(s);
    if (it == at.end() || it->second.size() != 2 || it->second[1] - it->second[0] != s) return false;
  }
  return true;
}

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

inline bool is_skolem(const std::vector<int>& seq, int n) {
  return static_cast<int>(seq.size()) == 2 * n && is_pairing(seq, range(1, n), {});
}

inline bool is_hooked_skolem(const std::vector<int>& seq, int n) {
  return static_cast<int>(seq.size()) == 2 * n + 1 && is_pairing(seq, range(1, n), {2 * n});
}

inline bool is_langford(const std::vector<int>& seq, int d, int l) {
  return static_cast<int>(seq.size()) == 2 * l && is_pairing(seq, range(d, d + l - 1), {});
}

inline bool is_hooked_langford(const std::vector<int>& seq, int d, int l) {
  return static_cast<int>(seq.size()) == 2 * l + 1 && is_pairing(seq, range(d, d + l - 1), {2 * l});
}

// Pivots by scanning for the second occurrence of each symbol directly.
inline std::vector<int> pivots(const std::vector<int>& seq, int n) {
  const bool hooked = static_cast<int>(seq.size()) == 2 * n + 1;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    int b = 0;
    for (std::size_t p = 0; p < seq.size(); ++p)
      if (seq[p] == i) b = static_cast<int>(p) + 1;
    const int r = b + i;
    if (hooked ? (r <= 2 * n + 1 && r != 2 * n) : r <= 2 * n) out.push_back(i);
  }
  return out;
}

// Sorted multiset |f(u) - f(v)| over the edges.
inline std::vector<int> edge_labels(const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<int>& f) {
  std::vector<int> out;
  for (auto [u, v] : edges) out.push_back(std::abs(f[static_cast<std::size_t>(u)] - f[static_cast<std::size_t>(v)]));
  std::sort(out.begin(), out.end());
  return out;
}

// 0 graceful, 1 near-graceful, 2 neither. Vertex labels must be distinct and
// lie in 0..m (graceful) or 0..m+1 (near-graceful).
inline int classify(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& f) {
  const int m = static_cast<int>(edges.size());
  if (std::set<int>(f.begin(), f.end()).size() != f.size()) return 2;
  const int top = *std::max_element(f.begin(), f.end());
  const int low = *std::min_element(f.begin(), f.end());
  if (low < 0) return 2;
  const auto labels = edge_labels(edges, f);
  if (top <= m && labels == range(1, m)) return 0;
  auto near = range(1, m - 1);
  near.push_back(m + 1);
  if (top <= m + 1 && labels == near) return 1;
  return 2;
}

// Triangles given by their vertex labels; vertices are the distinct labels.
struct LabelledTriangles {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> f;
};

inline LabelledTriangles from_triangles(const std::vector<std::array<int, 3>>& tris) {
  std::set<int> all;
  for (const auto& t : tris) all.insert(t.begin(), t.end());
  LabelledTriangles out;
  out.f.assign(all.begin(), all.end());
  auto id = [&](int label) {
    return static_cast<int>(std::lower_bound(out.f.begin(), out.f.end(), label) - out.f.begin());
  };
  for (const auto& t : tris) {
    out.edges.emplace_back(id(t[0]), id(t[1]));
    out.edges.emplace_back(id(t[1]), id(t[2]));
    out.edges.emplace_back(id(t[0]), id(t[2]));
  }
  return out;
}

// Brute force over every injective labelling with values 0..m: is any graceful?
inline bool any_graceful(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> f(static_cast<std::size_t>(vertices), -1);
  std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == vertices) return classify(edges, f) == 0;
    for (int x = 0; x <= m; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      f[static_cast<std::size_t>(v)] = x;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(x)] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
