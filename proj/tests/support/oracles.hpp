#pragma once

// Brute-force reference implementations used only by tests. They work from
// the edge definitions directly and share no code with the library.

#include <algorithm>
#include <numeric>
#include <vector>

#include "bicirc/spec.hpp"

namespace oracle {

// Vertex ids: u_i -> i, v_i -> m + i.
inline bool member(const std::vector<int>& set, int m, int x) {
  x = ((x % m) + m) % m;
  return std::find(set.begin(), set.end(), x) != set.end();
}

inline bool adjacent(const bicirc::BicirculantSpec& s, int x, int y) {
  const int m = s.m();
  if (x == y) return false;
  bool xu = x < m, yu = y < m;
  int i = x % m, j = y % m;
  if (xu && yu) return member(s.outer_types(), m, j - i);
  if (!xu && !yu) return member(s.inner_types(), m, j - i);
  if (xu) return member(s.spoke_types(), m, j - i);
  return member(s.spoke_types(), m, i - j);
}

inline std::vector<std::vector<char>> matrix(const bicirc::BicirculantSpec& s) {
  int n = 2 * s.m();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a[x][y] = adjacent(s, x, y);
  return a;
}

inline int component_count(const bicirc::BicirculantSpec& s) {
  auto a = matrix(s);
  int n = static_cast<int>(a.size());
  std::vector<int> seen(n, 0);
  int count = 0;
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ++count;
    std::vector<int> queue{r};
    seen[r] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int y = 0; y < n; ++y)
        if (a[queue[q]][y] && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
  }
  return count;
}

inline int edge_count(const bicirc::BicirculantSpec& s) {
  auto a = matrix(s);
  int e = 0;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y) e += a[x][y];
  return e;
}

// Number of Hamilton cycles, by trying every permutation with vertex 0 fixed.
inline long long hamilton_cycle_count(const bicirc::BicirculantSpec& s) {
  auto a = matrix(s);
  int n = static_cast<int>(a.size());
  if (n < 3) return 0;
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  long long count = 0;
  do {
    bool ok = a[0][rest.front()] && a[rest.back()][0];
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = a[rest[i]][rest[i + 1]];
    count += ok;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count / 2;
}

inline bool has_hamilton_path(const bicirc::BicirculantSpec& s, int from, int to) {
  auto a = matrix(s);
  int n = static_cast<int>(a.size());
  std::vector<int> mid;
  for (int v = 0; v < n; ++v)
    if (v != from && v != to) mid.push_back(v);
  do {
    int prev = from;
    bool ok = true;
    for (int v : mid) {
      if (!a[prev][v]) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && a[prev][to]) return true;
  } while (std::next_permutation(mid.begin(), mid.end()));
  return false;
}

// Plain backtracking from `from`, accepting only paths that end at `to`.
inline bool has_hamilton_path_dfs(const bicirc::BicirculantSpec& s, int from, int to) {
  auto a = matrix(s);
  int n = static_cast<int>(a.size());
  std::vector<char> used(n, 0);
  used[from] = 1;
  auto extend = [&](auto&& self, int at, int depth) -> bool {
    if (depth == n) return at == to;
    for (int y = 0; y < n; ++y) {
      if (used[y] || !a[at][y] || (y == to && depth + 1 < n)) continue;
      used[y] = 1;
      if (self(self, y, depth + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(extend, from, 1);
}

// Plain backtracking over vertex ids, no pruning beyond adjacency.
inline bool has_hamilton_cycle(const bicirc::BicirculantSpec& s) {
  auto a = matrix(s);
  int n = static_cast<int>(a.size());
  if (n < 3) return false;
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto extend = [&](auto&& self, int at, int depth) -> bool {
    if (depth == n) return a[at][0];
    for (int y = 1; y < n; ++y) {
      if (used[y] || !a[at][y]) continue;
      used[y] = 1;
      if (self(self, y, depth + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(extend, 0, 1);
}

// Each id once, consecutive ids (cyclically) adjacent.
inline bool is_hamilton_cycle(const bicirc::BicirculantSpec& s, const std::vector<int>& ids) {
  int n = 2 * s.m();
  if (static_cast<int>(ids.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : ids) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!adjacent(s, ids[i], ids[(i + 1) % n])) return false;
  return true;
}

}  // namespace oracle
