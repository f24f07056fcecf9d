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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgq/action.hpp"
#include "sgq/perm.hpp"

namespace sgq {

using Vertex = Point;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on {0..n-1} with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  // Rejects loops, out-of-range endpoints and repeated edges.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
  // Same, but repeated edges collapse silently; used by the constructions.
  static Graph from_edge_set(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;  // u < v, sorted
  std::optional<std::size_t> valency() const;  // when regular
  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// s-arcs (no immediate backtracking) in lexicographic order; s = 0 gives vertices.
std::vector<Object> s_arcs(const Graph& g, std::size_t s);
// s-paths (distinct vertices) up to reversal, each in its lex-smaller orientation.
std::vector<Object> s_paths(const Graph& g, std::size_t s);

ActionDomain arc_domain(const Graph& g, std::size_t s);
ActionDomain path_domain(const Graph& g, std::size_t s);

std::optional<std::size_t> girth(const Graph& g);  // nullopt for a forest
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

struct CycleShape {
  std::size_t m;  // number of cycles
  std::size_t n;  // common length
};
// (m, n) when the graph is a disjoint union of m cycles of one length n.
std::optional<CycleShape> cycle_union_shape(const Graph& g);

// Edges between two disjoint vertex sets, typed as 3K2, K33-3K2, K33 or other(...).
std::string bipartite_pattern(const Graph& g, const std::vector<Vertex>& left,
                              const std::vector<Vertex>& right);

bool preserves_adjacency(const Graph& g, const Permutation& p);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();
Graph disjoint_copies(const Graph& g, std::size_t copies);

}  // namespace sgq
