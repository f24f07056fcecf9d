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

#include "sgq/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "sgq/error.hpp"

namespace sgq {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw ContractError("repeated edge " + std::to_string(std::min(u, v)) + " " + std::to_string(std::max(u, v)));
  }
  return from_edge_set(n, edges);
}

Graph Graph::from_edge_set(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) continue;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  g.edge_count_ = seen.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<std::size_t> Graph::valency() const {
  if (adj_.empty()) return std::nullopt;
  std::size_t d = adj_[0].size();
  for (const auto& a : adj_)
    if (a.size() != d) return std::nullopt;
  return d;
}

std::vector<Object> s_arcs(const Graph& g, std::size_t s) {
  std::vector<Object> out;
  Object cur;
  std::function<void()> rec = [&] {
    if (cur.size() == s + 1) {
      out.push_back(cur);
      return;
    }
    Vertex last = cur.back();
    for (Vertex w : g.neighbors(last)) {
      if (cur.size() >= 2 && w == cur[cur.size() - 2]) continue;
      cur.push_back(w);
      rec();
      cur.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    cur = {v};
    rec();
  }
  return out;
}

std::vector<Object> s_paths(const Graph& g, std::size_t s) {
  std::vector<Object> out;
  Object cur;
  std::vector<bool> on(g.order(), false);
  std::function<void()> rec = [&] {
    if (cur.size() == s + 1) {
      Object rev(cur.rbegin(), cur.rend());
      if (!(rev < cur)) out.push_back(cur);
      return;
    }
    for (Vertex w : g.neighbors(cur.back())) {
      if (on[w]) continue;
      on[w] = true;
      cur.push_back(w);
      rec();
      cur.pop_back();
      on[w] = false;
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    cur = {v};
    on[v] = true;
    rec();
    on[v] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ActionDomain arc_domain(const Graph& g, std::size_t s) {
  return ActionDomain(DomainKind::arcs, Shape::tuple(s + 1), s_arcs(g, s));
}

ActionDomain path_domain(const Graph& g, std::size_t s) {
  return ActionDomain(DomainKind::s_paths, Shape::path(), s_paths(g, s));
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

std::optional<CycleShape> cycle_union_shape(const Graph& g) {
  if (g.order() == 0 || g.valency() != std::optional<std::size_t>(2)) return std::nullopt;
  auto comps = components(g);
  std::size_t n = comps[0].size();
  for (const auto& c : comps)
    if (c.size() != n) return std::nullopt;
  return CycleShape{comps.size(), n};
}

std::string bipartite_pattern(const Graph& g, const std::vector<Vertex>& left,
                              const std::vector<Vertex>& right) {
  std::set<Vertex> r(right.begin(), right.end());
  for (Vertex v : left)
    if (r.count(v)) throw ContractError("bipartite sides overlap");
  std::vector<std::size_t> dl, dr(right.size(), 0);
  std::size_t edges = 0;
  for (Vertex u : left) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < right.size(); ++j)
      if (g.adjacent(u, right[j])) {
        ++d;
        ++dr[j];
      }
    dl.push_back(d);
    edges += d;
  }
  auto constant = [](const std::vector<std::size_t>& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](std::size_t x) { return x == v[0]; });
  };
  if (left.size() == 3 && right.size() == 3 && constant(dl) && constant(dr)) {
    if (dl[0] == 1) return "3K2";
    if (dl[0] == 2) return "K33-3K2";
    if (dl[0] == 3) return "K33";
  }
  std::ostringstream os;
  os << "other(" << left.size() << "x" << right.size() << ",edges=" << edges;
  if (constant(dl) && constant(dr)) os << ",biregular=" << dl[0] << "/" << dr[0];
  os << ")";
  return os.str();
}

bool preserves_adjacency(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) throw ContractError("permutation degree differs from graph order");
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) es.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::from_edges(a + b, es);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) es.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edges(n, es);
}

Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, es);
}

Graph disjoint_copies(const Graph& g, std::size_t copies) {
  std::vector<Edge> es;
  const auto n = static_cast<Vertex>(g.order());
  for (std::size_t c = 0; c < copies; ++c)
    for (auto [u, v] : g.edges()) es.emplace_back(u + c * n, v + c * n);
  return Graph::from_edges(g.order() * copies, es);
}

}  // namespace sgq
