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
#include <vector>

#include "sgq/graph.hpp"
#include "sgq/group.hpp"

namespace sgq {

struct SymmetryReport {
  std::uint64_t group_order = 0;
  bool preserves_adjacency = false;
  bool vertex_transitive = false;
  // Largest s <= cap with the group transitive on s-arcs for every s' <= s;
  // -1 when not even vertex-transitive.
  int max_s = -1;
  std::vector<std::size_t> arc_orbit_counts;  // index s = 0..cap
  std::optional<int> regular_at;              // least s with |X| = |Arc_s|
  std::optional<GroupTag> local;              // action of a vertex stabilizer on its neighbours
  bool faithful = true;
};

SymmetryReport analyze_symmetry(const Graph& g, const PermGroup& x, int s_cap = 4);

// Group induced by the stabilizer of v on the neighbourhood of v, with
// points numbered by position in the sorted neighbour list.
PermGroup local_group(const Graph& g, const PermGroup& x, Vertex v);
GroupTag local_action(const Graph& g, const PermGroup& x, Vertex v);

bool is_s_arc_transitive(const Graph& g, const PermGroup& x, std::size_t s);
bool is_s_arc_regular(const Graph& g, const PermGroup& x, std::size_t s);
std::size_t orbit_count(const PermGroup& x, const ActionDomain& d);

}  // namespace sgq
