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

#include "sgq/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgq/action.hpp"
#include "sgq/error.hpp"

namespace sgq {

namespace {

Object path2(Vertex a, Vertex b, Vertex c) { return a <= c ? Object{a, b, c} : Object{c, b, a}; }

// Vertex sequence of a component of a 2-regular graph.
std::vector<Vertex> walk(const Graph& g, Vertex start) {
  std::vector<Vertex> seq{start};
  Vertex prev = start, cur = g.neighbors(start).front();
  while (cur != start) {
    seq.push_back(cur);
    const auto& nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return seq;
}

}  // namespace

NearPolygonCheck verify_near_ngonal(const Graph& g, const std::vector<Object>& cycles) {
  NearPolygonCheck r;
  if (!is_connected(g)) {
    r.reason = "graph is disconnected";
    return r;
  }
  auto gi = girth(g);
  if (gi && *gi < 4) {
    r.reason = "girth " + std::to_string(*gi) + " is below 4";
    return r;
  }
  if (cycles.empty()) {
    r.reason = "no cycles given";
    return r;
  }
  r.n = cycles.front().size();
  std::map<Object, std::size_t> count;
  for (const auto& c : cycles) {
    const std::size_t n = c.size();
    if (n != r.n) {
      r.reason = "cycles have different lengths";
      r.witness = c;
      return r;
    }
    std::set<Vertex> distinct(c.begin(), c.end());
    bool ok = n >= 3 && distinct.size() == n;
    for (std::size_t i = 0; ok && i < n; ++i)
      if (c[i] >= g.order() || !g.adjacent(c[i], c[(i + 1) % n])) ok = false;
    if (!ok) {
      r.reason = "listed sequence is not a cycle of the graph";
      r.witness = c;
      return r;
    }
    for (std::size_t i = 0; i < n; ++i) ++count[path2(c[i], c[(i + 1) % n], c[(i + 2) % n])];
  }
  for (const auto& p : s_paths(g, 2)) {
    auto it = count.find(p);
    std::size_t k = it == count.end() ? 0 : it->second;
    if (k != 1) {
      r.reason = "2-arc lies in " + std::to_string(k) + " cycles";
      r.witness = p;
      return r;
    }
  }
  r.ok = true;
  return r;
}

CycleSet extract_cycle_set(const Graph& g, const PermGroup& x, const ThreeArcOrbit& delta) {
  if (delta.ell.empty() || delta.ell.front() != 1) throw ContractError("3-arc orbit must have first l-entry 1");
  Construction gim = gimel_construct(g, x, delta);
  auto shape = cycle_union_shape(gim.graph);
  if (!shape) throw ContractError("2-path graph is not a union of equal cycles");
  CycleSet cs;
  const Shape cyc = Shape::cycle();
  std::set<Object> cycles;
  for (const auto& comp : components(gim.graph)) {
    Object c;
    for (Vertex v : walk(gim.graph, comp.front())) c.push_back(gim.labels[v][1]);
    cycles.insert(cyc.canonical(c));
  }
  cs.cycles.assign(cycles.begin(), cycles.end());
  cs.m = shape->m;
  cs.n = shape->n;
  const std::size_t val = g.valency().value_or(0);
  cs.count_matches = cs.m * cs.n == g.size() * (val - 1) && cs.cycles.size() == cs.m;

  auto dom = ActionDomain::open(DomainKind::cycles, cyc);
  auto orb = orbit(x, dom, cs.cycles.front(), false);
  cs.one_orbit = orb.size() == cs.cycles.size();
  for (const auto& c : cs.cycles)
    if (!orb.contains(c)) cs.one_orbit = false;

  cs.dihedral = true;
  for (const auto& c : cs.cycles) {
    PermGroup st = stabilizer(x, dom, c);
    std::vector<Object> pts;
    for (Vertex v : c) pts.push_back({v});
    auto tag = identify(induced_group(st, ActionDomain(DomainKind::points, Shape::tuple(1), pts)));
    if (tag.tag != "dihedral(" + std::to_string(c.size()) + ")") cs.dihedral = false;
  }

  std::set<Object> arcs3;
  std::map<Object, std::size_t> count;
  for (const auto& c : cs.cycles) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      Object a{c[i], c[(i + 1) % n], c[(i + 2) % n], c[(i + 3) % n]};
      arcs3.insert(a);
      arcs3.insert(reversed(a));
      ++count[path2(c[i], c[(i + 1) % n], c[(i + 2) % n])];
    }
  }
  cs.covers_delta = std::vector<Object>(arcs3.begin(), arcs3.end()) == delta.members;
  cs.unique_cover = true;
  for (const auto& p : s_paths(g, 2)) {
    auto it = count.find(p);
    if (it == count.end() || it->second != 1) cs.unique_cover = false;
  }

  auto gi = girth(g);
  if (gi && *gi == 3) {
    cs.branch = g.order() == val + 1 ? "complete" : "neither";
  } else {
    cs.near = verify_near_ngonal(g, cs.cycles);
    cs.branch = cs.near->ok ? "near-polygonal" : "neither";
  }
  return cs;
}

}  // namespace sgq
