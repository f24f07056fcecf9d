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

#include <algorithm>
#include <map>
#include <set>

#include "sgq/arcs.hpp"
#include "sgq/error.hpp"
#include "sgq/iso.hpp"
#include "sgq/quotient.hpp"
#include "sgq/symmetry.hpp"

namespace sgq {

RefinementReport quotient_refinement(const Graph& g, const PermGroup& x, const Partition& p) {
  auto chk = validate_partition(g, x, p.blocks());
  if (!chk.ok()) throw ContractError("partition rejected: " + chk.detail);
  LocalParams lp = local_parameters(g, p);
  if (lp.r != 2 || lp.b < 3)
    throw ContractError("requires r=2 and b>=3, got r=" + std::to_string(lp.r) + " b=" + std::to_string(lp.b));
  RefinementReport R;
  Graph q = quotient_graph(g, p);
  PermGroup xq = block_action(x, p);

  for (Vertex b = 0; b < q.order(); ++b) {
    const auto& nb = q.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto ti = trace(g, p, b, nb[i]), tj = trace(g, p, b, nb[j]);
        std::vector<Vertex> both;
        std::set_intersection(ti.begin(), ti.end(), tj.begin(), tj.end(), std::back_inserter(both));
        if (both.empty()) {
          R.failure = "empty intersection on the 2-path [" + std::to_string(nb[i]) + "," + std::to_string(b) + "," +
                      std::to_string(nb[j]) + "]";
          return R;
        }
      }
  }
  R.hypothesis_holds = true;
  if (!lp.lambda) {
    R.failure = "lambda is not constant";
    return R;
  }
  R.lambda = *lp.lambda;
  R.quotient_2at = orbit_count(xq, arc_domain(q, 2)) == 1;

  auto other = [&](Vertex v, std::size_t not_this) {
    for (auto c : neighbour_blocks(g, p, v))
      if (c != not_this) return static_cast<Vertex>(c);
    throw ContractError("vertex meets fewer than two blocks");
  };
  std::set<Object> delta;
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) {
      auto bv = p.block_of(v), bu = p.block_of(u);
      if (bv == bu) continue;
      delta.insert({other(v, bu), static_cast<Vertex>(bv), static_cast<Vertex>(bu), other(u, bv)});
    }
  R.delta.assign(delta.begin(), delta.end());
  auto orb = three_arc_orbit_of(q, xq, R.delta.front());
  R.delta_self_paired_orbit = orb.self_paired && orb.members == R.delta;
  if (!R.delta_self_paired_orbit) return R;

  Construction gim = gimel_construct(q, R.delta, &xq);
  std::map<Object, Vertex> idx;
  for (std::size_t i = 0; i < gim.labels.size(); ++i) idx[gim.labels[i]] = static_cast<Vertex>(i);
  auto label = [&](Vertex v) {
    auto nb = neighbour_blocks(g, p, v);
    return idx.at({static_cast<Vertex>(nb[0]), static_cast<Vertex>(p.block_of(v)), static_cast<Vertex>(nb[1])});
  };
  if (R.lambda == 1) {
    std::vector<Vertex> map;
    for (Vertex v = 0; v < g.order(); ++v) map.push_back(label(v));
    if (is_isomorphism(g, gim.graph, map)) R.iso = std::move(map);
    return R;
  }
  std::map<Vertex, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < g.order(); ++v) cells[label(v)].push_back(v);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& [k, c] : cells) blocks.push_back(std::move(c));
  Partition qp(g.order(), std::move(blocks));
  if (!validate_partition(g, x, qp.blocks()).ok()) return R;
  Graph gq = quotient_graph(g, qp);
  std::vector<Vertex> map;
  for (const auto& blk : qp.blocks()) map.push_back(label(blk.front()));
  R.refinement = qp;
  if (is_isomorphism(gq, gim.graph, map)) R.iso = std::move(map);
  return R;
}

}  // namespace sgq
