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

#include "sgq/symmetry.hpp"

#include "sgq/action.hpp"
#include "sgq/error.hpp"

namespace sgq {

namespace {

void check_pair(const Graph& g, const PermGroup& x) {
  if (x.degree() != g.order())
    throw ContractError("group degree " + std::to_string(x.degree()) + " differs from graph order " +
                        std::to_string(g.order()));
}

}  // namespace

std::size_t orbit_count(const PermGroup& x, const ActionDomain& d) {
  return orbit_partition(x, d).size();
}

PermGroup local_group(const Graph& g, const PermGroup& x, Vertex v) {
  check_pair(g, x);
  if (v >= g.order()) throw DomainError("vertex out of range");
  PermGroup stab = x.point_stabilizer(v);
  std::vector<Object> nbrs;
  for (Vertex w : g.neighbors(v)) nbrs.push_back({w});
  ActionDomain d(DomainKind::points, Shape::tuple(1), nbrs);
  return induced_group(stab, d);
}

GroupTag local_action(const Graph& g, const PermGroup& x, Vertex v) {
  check_pair(g, x);
  if (!x.is_transitive()) throw ContractError("graph is not vertex-transitive under the group");
  if (g.degree(v) == 0) throw ContractError("isolated vertex has no local action");
  return identify(local_group(g, x, v));
}

bool is_s_arc_transitive(const Graph& g, const PermGroup& x, std::size_t s) {
  check_pair(g, x);
  auto d = arc_domain(g, s);
  return d.size() > 0 && orbit_count(x, d) == 1;
}

bool is_s_arc_regular(const Graph& g, const PermGroup& x, std::size_t s) {
  if (!is_s_arc_transitive(g, x, s)) throw ContractError("group is not transitive on " + std::to_string(s) + "-arcs");
  return x.order() == s_arcs(g, s).size();
}

SymmetryReport analyze_symmetry(const Graph& g, const PermGroup& x, int s_cap) {
  check_pair(g, x);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) throw ContractError("isolated vertex " + std::to_string(v));
  SymmetryReport r;
  r.group_order = x.order();
  r.preserves_adjacency = true;
  for (const auto& p : x.generators())
    if (!preserves_adjacency(g, p)) r.preserves_adjacency = false;
  r.faithful = kernel_of_action(x, ActionDomain::points(g.order())).is_trivial();
  r.vertex_transitive = x.is_transitive();
  if (!r.preserves_adjacency) return r;  // arcs do not form a domain
  bool chain = true;
  for (int s = 0; s <= s_cap; ++s) {
    auto d = arc_domain(g, static_cast<std::size_t>(s));
    std::size_t k = orbit_count(x, d);
    r.arc_orbit_counts.push_back(k);
    if (chain && k == 1) {
      r.max_s = s;
      if (!r.regular_at && x.order() == d.size()) r.regular_at = s;
    } else {
      chain = false;
    }
  }
  if (r.vertex_transitive) r.local = local_action(g, x, 0);
  return r;
}

}  // namespace sgq
