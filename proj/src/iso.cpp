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

#include "sgq/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sgq/action.hpp"
#include "sgq/error.hpp"

namespace sgq {

namespace {

using Colors = std::vector<std::uint32_t>;

constexpr std::size_t kNodeBudget = 2'000'000;

// Both graphs side by side; vertex v of b lives at na + v.
struct Joint {
  std::size_t na = 0;
  std::size_t nb = 0;
  std::vector<const std::vector<Vertex>*> adj;
  std::vector<std::uint32_t> offset;

  Joint(const Graph& a, const Graph& b) : na(a.order()), nb(b.order()) {
    for (Vertex v = 0; v < na; ++v) {
      adj.push_back(&a.neighbors(v));
      offset.push_back(0);
    }
    for (Vertex v = 0; v < nb; ++v) {
      adj.push_back(&b.neighbors(v));
      offset.push_back(static_cast<std::uint32_t>(na));
    }
  }
  std::size_t size() const { return na + nb; }
};

std::size_t normalize(Colors& c) {
  std::vector<std::uint32_t> vals(c.begin(), c.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& x : c) x = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
  return vals.size();
}

// 1-dimensional Weisfeiler-Leman until stable. New colours are ranks of
// (old colour, neighbour colour multiset), so labels agree on both sides.
void refine(const Joint& j, Colors& c) {
  const std::size_t n = j.size();
  std::size_t classes = normalize(c);
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<std::size_t> idx(n);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(c[v]);
      for (Vertex w : *j.adj[v]) s.push_back(c[w + j.offset[v]]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return sig[x] < sig[y]; });
    Colors next(n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    std::size_t now = n ? rank + 1 : 0;
    c.swap(next);
    if (now == classes) break;
    classes = now;
  }
}

bool balanced(const Joint& j, const Colors& c) {
  std::map<std::uint32_t, long> diff;
  for (std::size_t v = 0; v < j.na; ++v) ++diff[c[v]];
  for (std::size_t v = j.na; v < j.size(); ++v) --diff[c[v]];
  for (auto& [k, d] : diff)
    if (d != 0) return false;
  return true;
}

struct Searcher {
  const Joint& j;
  const Graph& a;
  const Graph& b;
  std::size_t nodes = 0;

  std::optional<std::vector<Vertex>> run(Colors c) {
    if (++nodes > kNodeBudget) throw SizeError("isomorphism search exceeded its node budget");
    refine(j, c);
    if (!balanced(j, c)) return std::nullopt;
    std::map<std::uint32_t, std::size_t> count;
    for (std::size_t v = 0; v < j.na; ++v) ++count[c[v]];
    std::uint32_t target = 0;
    std::size_t best = 0;
    for (auto& [col, k] : count)
      if (k > 1 && (best == 0 || k < best)) {
        best = k;
        target = col;
      }
    if (best == 0) {
      std::vector<Vertex> where(count.size());
      for (std::size_t v = j.na; v < j.size(); ++v) where[c[v]] = static_cast<Vertex>(v - j.na);
      std::vector<Vertex> map(j.na);
      for (std::size_t v = 0; v < j.na; ++v) map[v] = where[c[v]];
      if (is_isomorphism(a, b, map)) return map;
      return std::nullopt;
    }
    std::size_t v = 0;
    while (c[v] != target) ++v;
    const std::uint32_t fresh = static_cast<std::uint32_t>(count.size());
    for (std::size_t w = j.na; w < j.size(); ++w) {
      if (c[w] != target) continue;
      Colors next = c;
      next[v] = fresh;
      next[w] = fresh;
      if (auto m = run(std::move(next))) return m;
    }
    return std::nullopt;
  }
};

std::multiset<std::size_t> degree_multiset(const Graph& g) {
  std::multiset<std::size_t> s;
  for (Vertex v = 0; v < g.order(); ++v) s.insert(g.degree(v));
  return s;
}

std::multiset<std::size_t> component_sizes(const Graph& g) {
  std::multiset<std::size_t> s;
  for (const auto& c : components(g)) s.insert(c.size());
  return s;
}

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
  if (a.order() != b.order() || a.size() != b.size() || map.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Vertex x : map) {
    if (x >= b.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (auto [u, v] : a.edges())
    if (!b.adjacent(map[u], map[v])) return false;
  return true;
}

IsoResult find_isomorphism(const Graph& a, const std::vector<std::uint32_t>& colors_a,
                           const Graph& b, const std::vector<std::uint32_t>& colors_b) {
  IsoResult r;
  if (colors_a.size() != a.order() || colors_b.size() != b.order())
    throw ContractError("colouring size differs from graph order");
  if (a.order() != b.order()) {
    r.certificate = "vertex counts differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
    return r;
  }
  if (a.size() != b.size()) {
    r.certificate = "edge counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return r;
  }
  if (degree_multiset(a) != degree_multiset(b)) {
    r.certificate = "degree multisets differ";
    return r;
  }
  if (component_sizes(a) != component_sizes(b)) {
    r.certificate = "component size multisets differ";
    return r;
  }
  Joint j(a, b);
  Colors c(colors_a.begin(), colors_a.end());
  c.insert(c.end(), colors_b.begin(), colors_b.end());
  Colors probe = c;
  refine(j, probe);
  if (!balanced(j, probe)) {
    r.certificate = "colour refinement separates the graphs";
    return r;
  }
  Searcher s{j, a, b};
  r.map = s.run(std::move(c));
  if (!r.map) r.certificate = "exhaustive individualisation search found no isomorphism";
  return r;
}

IsoResult find_isomorphism(const Graph& a, const Graph& b) {
  return find_isomorphism(a, std::vector<std::uint32_t>(a.order(), 0), b,
                          std::vector<std::uint32_t>(b.order(), 0));
}

PermGroup automorphism_group(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.order();
  if (n > max_vertices) throw SizeError("graph has more than " + std::to_string(max_vertices) + " vertices");
  if (n == 0) return PermGroup::trivial(0);
  Joint j(g, g);

  // First path of the search tree: individualise the first vertex of the
  // smallest non-singleton cell until the partition is discrete.
  struct Step {
    Colors before;  // refined colouring before individualising base
    Vertex base;
  };
  std::vector<Step> path;
  Colors c(2 * n, 0);
  refine(j, c);
  for (;;) {
    std::map<std::uint32_t, std::size_t> count;
    for (std::size_t v = 0; v < n; ++v) ++count[c[v]];
    std::uint32_t target = 0;
    std::size_t best = 0;
    for (auto& [col, k] : count)
      if (k > 1 && (best == 0 || k < best)) {
        best = k;
        target = col;
      }
    if (best == 0) break;
    Vertex v = 0;
    while (c[v] != target) ++v;
    path.push_back({c, v});
    const auto fresh = static_cast<std::uint32_t>(count.size());
    c[v] = fresh;
    c[v + n] = fresh;
    refine(j, c);
  }

  std::vector<Permutation> gens;
  auto orbit_of = [&](Vertex p) {
    std::set<Vertex> orb{p};
    std::vector<Vertex> todo{p};
    while (!todo.empty()) {
      Vertex x = todo.back();
      todo.pop_back();
      for (const auto& s : gens)
        if (orb.insert(s(x)).second) todo.push_back(s(x));
    }
    return orb;
  };
  Searcher s{j, g, g};
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Colors& before = it->before;
    const Vertex b = it->base;
    auto orb = orbit_of(b);
    const std::uint32_t fresh = *std::max_element(before.begin(), before.end()) + 1;
    for (Vertex w = 0; w < n; ++w) {
      if (before[w] != before[b] || orb.count(w)) continue;
      Colors trial = before;
      trial[b] = fresh;
      trial[w + n] = fresh;
      if (auto m = s.run(std::move(trial))) {
        gens.emplace_back(std::vector<Point>(m->begin(), m->end()));
        orb = orbit_of(b);
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace sgq
