#pragma once

// Brute-force reference computations. Deliberately naive: plain std
// containers, no use of the library's classes, closures or counts.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "approxcommute/group.hpp"
#include "approxcommute/subset.hpp"

namespace oracle {

using Perm = std::vector<int>;
using Table = std::vector<std::vector<int>>;

// (pq)(i) = q(p(i)), same convention as the library.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

// Every element of <gens> by repeated multiplication until nothing new.
inline std::set<Perm> perm_closure(const std::vector<Perm>& gens, int degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> all{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(all.begin(), all.end());
    for (const auto& x : cur)
      for (const auto& g : gens)
        if (all.insert(compose(x, g)).second) grew = true;
  }
  return all;
}

// Cayley table over the closure in std::set order; index 0 is the identity
// (lexicographically least permutation).
inline Table perm_table(const std::vector<Perm>& gens, int degree) {
  const auto all = perm_closure(gens, degree);
  std::vector<Perm> elems(all.begin(), all.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
  Table t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index[compose(elems[a], elems[b])];
  return t;
}

inline Table table_of(const approxcommute::Group& g) {
  const int n = int(g.order());
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = int(g.mul(a, b));
  return t;
}

inline int identity_of(const Table& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < t.size() && ok; ++x) ok = t[e][x] == int(x) && t[x][e] == int(x);
    if (ok) return int(e);
  }
  return -1;
}

inline int inverse_of(const Table& t, int x) {
  const int e = identity_of(t);
  for (std::size_t y = 0; y < t.size(); ++y)
    if (t[x][y] == e) return int(y);
  return -1;
}

// Number of ordered pairs (x, y) in X x Y with xy = yx.
inline std::uint64_t commuting_pairs(const Table& t, const std::vector<int>& xs, const std::vector<int>& ys) {
  std::uint64_t c = 0;
  for (int x : xs)
    for (int y : ys)
      if (t[x][y] == t[y][x]) ++c;
  return c;
}

inline std::vector<int> all_elements(const Table& t) {
  std::vector<int> v(t.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Conjugacy classes by brute force: orbit of each element under x -> g^-1 x g.
inline std::vector<std::set<int>> conjugacy_classes(const Table& t) {
  std::vector<std::set<int>> out;
  std::vector<bool> seen(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (std::size_t g = 0; g < t.size(); ++g) cls.insert(t[t[inverse_of(t, int(g))][x]][g]);
    for (int y : cls) seen[y] = true;
    out.push_back(cls);
  }
  return out;
}

using ElemSet = std::set<int>;

// Closure of a set under multiplication (finite, so that is a subgroup).
inline ElemSet closure(const Table& t, ElemSet s) {
  s.insert(identity_of(t));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(t[a][b]).second) grew = true;
  }
  return s;
}

// All subgroups: joins of cyclic subgroups, iterated to a fixed point.
inline std::set<ElemSet> all_subgroups(const Table& t) {
  std::set<ElemSet> subs;
  for (std::size_t x = 0; x < t.size(); ++x) subs.insert(closure(t, {int(x)}));
  std::vector<ElemSet> cyclic(subs.begin(), subs.end());
  std::vector<ElemSet> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        ElemSet u = h;
        u.insert(c.begin(), c.end());
        auto j = closure(t, u);
        if (subs.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  return subs;
}

inline bool is_normal(const Table& t, const ElemSet& h) {
  for (std::size_t g = 0; g < t.size(); ++g) {
    const int gi = inverse_of(t, int(g));
    for (int x : h)
      if (!h.count(t[t[gi][x]][g])) return false;
  }
  return true;
}

inline std::set<ElemSet> normal_subgroups(const Table& t) {
  std::set<ElemSet> out;
  for (const auto& h : all_subgroups(t))
    if (is_normal(t, h)) out.insert(h);
  return out;
}

inline ElemSet to_set(const approxcommute::Subset& s) {
  ElemSet out;
  for (auto x : s) out.insert(int(x));
  return out;
}

// Quaternion units {1,-1,i,-i,j,-j,k,-k} as (sign, unit) with unit 0..3
// meaning 1,i,j,k; Hamilton's rules.
inline Table quaternion_units() {
  // products of units: u*v = sign * unit
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto id = [](int s, int u) { return 2 * u + (s < 0 ? 1 : 0); };
  Table t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int sa = a % 2 ? -1 : 1, ua = a / 2, sb = b % 2 ? -1 : 1, ub = b / 2;
      t[a][b] = id(sa * sb * sign[ua][ub], unit[ua][ub]);
    }
  return t;
}

}  // namespace oracle
