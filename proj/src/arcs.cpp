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

#include "sgq/arcs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sgq/error.hpp"
#include "sgq/symmetry.hpp"

namespace sgq {

namespace {

void check_pair(const Graph& g, const PermGroup& x) {
  if (x.degree() != g.order()) throw ContractError("group degree differs from graph order");
}

bool is_three_arc(const Graph& g, const Object& a) {
  return a.size() == 4 && a[0] < g.order() && g.adjacent(a[0], a[1]) && g.adjacent(a[1], a[2]) &&
         g.adjacent(a[2], a[3]) && a[0] != a[2] && a[1] != a[3];
}

Object path2(Vertex a, Vertex b, Vertex c) { return a <= c ? Object{a, b, c} : Object{c, b, a}; }

std::unordered_map<Object, std::size_t, ObjectHash> index_map(const std::vector<Object>& v) {
  std::unordered_map<Object, std::size_t, ObjectHash> m;
  for (std::size_t i = 0; i < v.size(); ++i) m.emplace(v[i], i);
  return m;
}

Partition partition_by_position(std::size_t n, const std::vector<Object>& labels, std::size_t pos) {
  std::map<Point, std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i][pos]].push_back(static_cast<Vertex>(i));
  std::vector<std::vector<Vertex>> blocks;
  for (auto& [k, b] : groups) blocks.push_back(std::move(b));
  return Partition(n, std::move(blocks));
}

void require_self_paired(const std::vector<Object>& sorted_arcs) {
  for (const auto& a : sorted_arcs)
    if (!std::binary_search(sorted_arcs.begin(), sorted_arcs.end(), reversed(a)))
      throw ContractError("3-arc set is not self-paired");
}

void require_orbit(const Graph& g, const PermGroup& x, const std::vector<Object>& sorted_arcs) {
  auto o = orbit(x, ActionDomain::open(DomainKind::arcs, Shape::tuple(4)), sorted_arcs.front(), false);
  if (o.size() != sorted_arcs.size()) throw ContractError("3-arc set is not a single orbit");
  for (const auto& a : sorted_arcs)
    if (!o.contains(a)) throw ContractError("3-arc set is not a single orbit");
  (void)g;
}

}  // namespace

Object reversed(const Object& o) { return Object(o.rbegin(), o.rend()); }

bool ThreeArcOrbit::contains(const Object& arc) const {
  return std::binary_search(members.begin(), members.end(), arc);
}

std::vector<std::size_t> ell_vector(const Graph& g, const PermGroup& x, const Object& arc3) {
  check_pair(g, x);
  if (!is_three_arc(g, arc3)) throw DomainError("not a 3-arc");
  PermGroup h = x.pointwise_stabilizer({arc3[0], arc3[1], arc3[2]});
  std::vector<Vertex> pts;
  for (Vertex w : g.neighbors(arc3[2]))
    if (w != arc3[1]) pts.push_back(w);
  std::set<Vertex> left(pts.begin(), pts.end());
  std::size_t first = 0;
  std::vector<std::size_t> rest;
  while (!left.empty()) {
    Vertex p = *left.begin();
    auto orb = h.orbit_of(p);
    for (Vertex q : orb) left.erase(q);
    if (std::binary_search(orb.begin(), orb.end(), arc3[3])) first = orb.size();
    else rest.push_back(orb.size());
  }
  std::sort(rest.begin(), rest.end());
  rest.insert(rest.begin(), first);
  return rest;
}

std::vector<ThreeArcOrbit> three_arc_orbits(const Graph& g, const PermGroup& x) {
  check_pair(g, x);
  auto d = arc_domain(g, 3);
  std::vector<ThreeArcOrbit> out;
  for (const auto& part : orbit_partition(x, d)) {
    ThreeArcOrbit o;
    for (auto i : part) o.members.push_back(d[i]);
    o.representative = o.members.front();
    o.self_paired = o.contains(reversed(o.representative));
    o.ell = ell_vector(g, x, o.representative);
    out.push_back(std::move(o));
  }
  return out;
}

ThreeArcOrbit three_arc_orbit_of(const Graph& g, const PermGroup& x, const Object& arc3) {
  check_pair(g, x);
  if (!is_three_arc(g, arc3)) throw DomainError("not a 3-arc");
  auto orb = orbit(x, ActionDomain::open(DomainKind::arcs, Shape::tuple(4)), arc3, false);
  ThreeArcOrbit o;
  o.members = orb.sorted();
  o.representative = o.members.front();
  o.self_paired = o.contains(reversed(o.representative));
  o.ell = ell_vector(g, x, o.representative);
  return o;
}

std::optional<Permutation> least_element_mapping(const PermGroup& x, const Object& from, const Object& to) {
  auto orb = orbit(x, ActionDomain::open(DomainKind::objects, Shape::tuple(from.size())), from, true);
  if (!orb.contains(to)) return std::nullopt;
  const Permutation& t = orb.element_to(to);
  PermGroup stab = x.pointwise_stabilizer(from);
  if (stab.order() > max_enumeration_order()) return t;
  Permutation best = t;
  for (const auto& h : stab.elements()) {
    Permutation c = h * t;
    if (c < best) best = c;
  }
  return best;
}

SelfPairedSearch find_self_paired_3arc(const Graph& g, const PermGroup& x) {
  check_pair(g, x);
  auto val = g.valency();
  if (!val || *val < 2) throw ContractError("graph must be regular of valency at least 2");
  SelfPairedSearch out;
  if (*val % 2 == 0) {
    const Vertex tau = 0, sigma = g.neighbors(0).front();
    if (auto y = least_element_mapping(x, {tau, sigma}, {sigma, tau})) {
      Permutation y2 = *y * *y;
      std::vector<Vertex> pts;
      for (Vertex w : g.neighbors(tau))
        if (w != sigma) pts.push_back(w);
      std::set<Vertex> left(pts.begin(), pts.end());
      std::optional<std::pair<Vertex, std::size_t>> pick;
      while (!left.empty()) {
        Vertex p = *left.begin();
        std::size_t len = 0;
        Vertex q = p;
        do {
          left.erase(q);
          q = y2(q);
          ++len;
        } while (q != p);
        if (len % 2 == 1) {
          pick = std::make_pair(p, len);
          break;
        }
      }
      if (pick) {
        Permutation z = y->pow(static_cast<long long>(pick->second));
        Object alpha{pick->first, tau, sigma, z(pick->first)};
        out.orbit = three_arc_orbit_of(g, x, alpha);
        out.method = "constructive";
        out.witness = z;
        return out;
      }
    }
  }
  out.method = "scan";
  for (auto& o : three_arc_orbits(g, x)) {
    if (!o.self_paired) continue;
    out.witness = least_element_mapping(x, o.representative, reversed(o.representative));
    out.orbit = std::move(o);
    break;
  }
  return out;
}

Construction gimel_construct(const Graph& sigma, const std::vector<Object>& delta_in, const PermGroup* x) {
  if (delta_in.empty()) throw ContractError("empty 3-arc set");
  std::vector<Object> delta = delta_in;
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  for (const auto& a : delta)
    if (!is_three_arc(sigma, a)) throw DomainError("element of the 3-arc set is not a 3-arc");
  require_self_paired(delta);
  if (x) require_orbit(sigma, *x, delta);
  Construction c;
  c.kind = "gimel";
  c.labels = s_paths(sigma, 2);
  auto idx = index_map(c.labels);
  std::vector<Edge> es;
  for (const auto& a : delta)
    es.emplace_back(static_cast<Vertex>(idx.at(path2(a[0], a[1], a[2]))),
                    static_cast<Vertex>(idx.at(path2(a[1], a[2], a[3]))));
  c.graph = Graph::from_edge_set(c.labels.size(), es);
  c.partition = partition_by_position(c.labels.size(), c.labels, 1);
  if (x) c.group = induced_group(*x, ActionDomain(DomainKind::s_paths, Shape::path(), c.labels));
  return c;
}

Construction gimel_construct(const Graph& sigma, const PermGroup& x, const ThreeArcOrbit& delta) {
  check_pair(sigma, x);
  return gimel_construct(sigma, delta.members, &x);
}

std::vector<Object> j_pairs(const Graph& sigma) {
  std::vector<Object> out;
  for (const auto& p : s_paths(sigma, 2)) {
    const Vertex t = p[1];
    for (Vertex s : sigma.neighbors(t)) {
      if (s == p[0] || s == p[2]) continue;
      const auto& ns = sigma.neighbors(s);
      for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
          if (ns[i] == t || ns[j] == t) continue;
          Object o = p;
          o.insert(o.end(), {ns[i], s, ns[j]});
          out.push_back(o);
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Object> j_orbit(const Graph& sigma, const PermGroup& x, const Object& pair) {
  check_pair(sigma, x);
  auto o = orbit(x, ActionDomain::open(DomainKind::path_pairs, Shape::path_pair(3)), pair, false);
  return o.sorted();
}

Construction psi_construct(const Graph& sigma, const PermGroup& x, const std::vector<Object>& lambda_in) {
  check_pair(sigma, x);
  auto val = sigma.valency();
  if (!val || *val < 3) throw ContractError("source must be regular of valency at least 3");
  if (!is_s_arc_transitive(sigma, x, 2)) throw ContractError("source is not 2-arc-transitive under the group");
  if (lambda_in.empty()) throw ContractError("empty pair set");
  Shape sh = Shape::path_pair(3);
  std::vector<Object> lambda;
  for (const auto& o : lambda_in) lambda.push_back(sh.canonical(o));
  std::sort(lambda.begin(), lambda.end());
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
  auto all = j_pairs(sigma);
  for (const auto& o : lambda) {
    if (!std::binary_search(all.begin(), all.end(), o)) throw DomainError("pair is not in J of the source");
    Object sw(o.begin() + 3, o.end());
    sw.insert(sw.end(), o.begin(), o.begin() + 3);
    if (!std::binary_search(lambda.begin(), lambda.end(), sw)) throw ContractError("pair set is not self-paired");
  }
  Construction c;
  c.kind = "psi";
  c.labels = s_paths(sigma, 2);
  auto idx = index_map(c.labels);
  std::vector<Edge> es;
  for (const auto& o : lambda)
    es.emplace_back(static_cast<Vertex>(idx.at(Object(o.begin(), o.begin() + 3))),
                    static_cast<Vertex>(idx.at(Object(o.begin() + 3, o.end()))));
  c.graph = Graph::from_edge_set(c.labels.size(), es);
  c.partition = partition_by_position(c.labels.size(), c.labels, 1);
  c.group = induced_group(x, ActionDomain(DomainKind::s_paths, Shape::path(), c.labels));
  return c;
}

std::vector<Object> jmap(const Graph& sigma, const std::vector<Object>& delta) {
  if (sigma.valency() != std::optional<std::size_t>(4)) throw ContractError("J map needs a tetravalent source");
  std::vector<Object> out;
  for (const auto& a : delta) {
    if (!is_three_arc(sigma, a)) throw DomainError("not a 3-arc");
    std::vector<Vertex> tt, ss;
    for (Vertex w : sigma.neighbors(a[1]))
      if (w != a[2] && w != a[0]) tt.push_back(w);
    for (Vertex w : sigma.neighbors(a[2]))
      if (w != a[1] && w != a[3]) ss.push_back(w);
    Object o = path2(tt[0], a[1], tt[1]);
    Object q = path2(ss[0], a[2], ss[1]);
    o.insert(o.end(), q.begin(), q.end());
    out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> gimel_psi_bijection(const Graph& sigma, const Construction& gimel, const Construction& psi) {
  auto idx = index_map(psi.labels);
  std::vector<Vertex> map;
  for (const auto& p : gimel.labels) {
    std::vector<Vertex> rest;
    for (Vertex w : sigma.neighbors(p[1]))
      if (w != p[0] && w != p[2]) rest.push_back(w);
    if (rest.size() != 2) throw ContractError("bijection needs a tetravalent source");
    map.push_back(static_cast<Vertex>(idx.at(path2(rest[0], p[1], rest[1]))));
  }
  return map;
}

Construction xi_construct(const Graph& sigma, const PermGroup& x, const ThreeArcOrbit& delta) {
  check_pair(sigma, x);
  auto val = sigma.valency();
  if (!val || *val < 3) throw ContractError("source must be regular of valency at least 3");
  if (!is_s_arc_transitive(sigma, x, 2)) throw ContractError("source is not 2-arc-transitive under the group");
  require_self_paired(delta.members);
  Construction c;
  c.kind = "xi";
  c.labels = s_arcs(sigma, 1);
  auto idx = index_map(c.labels);
  std::vector<Edge> es;
  for (const auto& a : delta.members)
    es.emplace_back(static_cast<Vertex>(idx.at({a[1], a[0]})), static_cast<Vertex>(idx.at({a[2], a[3]})));
  c.graph = Graph::from_edge_set(c.labels.size(), es);
  c.partition = partition_by_position(c.labels.size(), c.labels, 0);
  c.group = induced_group(x, ActionDomain(DomainKind::arcs, Shape::tuple(2), c.labels));
  return c;
}

}  // namespace sgq
