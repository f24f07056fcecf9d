// Copyright 2026 The sgq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations for the tests. Nothing here touches the
// stabilizer chain or the orbit machinery of the library; elements are plain
// image vectors and everything is enumerated.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sgq/graph.hpp"
#include "sgq/group.hpp"

namespace oracle {

using Img = std::vector<std::uint32_t>;

inline Img compose(const Img& a, const Img& b) {  // apply a, then b
  Img c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline std::set<Img> closure(const std::vector<Img>& gens, std::size_t n) {
  Img id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Img> seen{id};
  std::vector<Img> todo{id};
  while (!todo.empty()) {
    Img x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Img y = compose(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline std::set<Img> closure(const sgq::PermGroup& g) {
  std::vector<Img> gens;
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return closure(gens, g.degree());
}

inline bool adjacent(const sgq::Graph& g, std::uint32_t u, std::uint32_t v) {
  const auto& n = g.neighbors(u);
  return std::find(n.begin(), n.end(), v) != n.end();
}

// Sequences (v0..vs) with consecutive vertices adjacent and v_{i+2} != v_i.
inline std::vector<Img> arcs(const sgq::Graph& g, std::size_t s) {
  std::vector<Img> out;
  for (std::uint32_t v = 0; v < g.order(); ++v) out.push_back({v});
  for (std::size_t step = 0; step < s; ++step) {
    std::vector<Img> next;
    for (const auto& a : out)
      for (std::uint32_t w = 0; w < g.order(); ++w) {
        if (!adjacent(g, a.back(), w)) continue;
        if (a.size() >= 2 && a[a.size() - 2] == w) continue;
        Img b = a;
        b.push_back(w);
        next.push_back(b);
      }
    out = std::move(next);
  }
  return out;
}

inline Img act(const Img& g, const Img& seq) {
  Img out;
  for (auto p : seq) out.push_back(g[p]);
  return out;
}

// Orbits of a set of group elements on a list of sequences, as sorted sizes.
inline std::vector<std::size_t> orbit_sizes(const std::set<Img>& group, const std::vector<Img>& objs) {
  std::map<Img, std::size_t> where;
  std::vector<std::size_t> sizes;
  for (const auto& o : objs) {
    if (where.count(o)) continue;
    std::set<Img> orb;
    for (const auto& g : group) orb.insert(act(g, o));
    for (const auto& x : orb) where[x] = sizes.size();
    sizes.push_back(orb.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::set<Img> orbit(const std::set<Img>& group, const Img& o) {
  std::set<Img> out;
  for (const auto& g : group) out.insert(act(g, o));
  return out;
}

// Every vertex permutation preserving adjacency. Feasible to about 10 vertices.
inline std::uint64_t automorphism_count(const sgq::Graph& g) {
  Img p(g.order());
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!adjacent(g, p[u], p[v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool isomorphic(const sgq::Graph& a, const sgq::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  Img p(a.order());
  std::iota(p.begin(), p.end(), 0u);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!adjacent(b, p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::size_t component_count(const sgq::Graph& g) {
  std::vector<std::uint32_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
  std::size_t c = 0;
  for (std::uint32_t v = 0; v < g.order(); ++v) c += find(v) == v;
  return c;
}

}  // namespace oracle
