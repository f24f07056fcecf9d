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

#include <map>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sgq/arcs.hpp"
#include "sgq/error.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/iso.hpp"
#include "sgq/quotient.hpp"
#include "sgq/stars.hpp"

using namespace sgq;

namespace {

Object unordered(Object p) {
  Object r(p.rbegin(), p.rend());
  return std::min(p, r);
}

std::set<std::pair<Object, Object>> labelled_edges(const Construction& c, bool paths) {
  std::set<std::pair<Object, Object>> out;
  for (auto [u, v] : c.graph.edges()) {
    Object a = paths ? unordered(c.labels[u]) : c.labels[u];
    Object b = paths ? unordered(c.labels[v]) : c.labels[v];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

// brute-force orbit of the representative under the closure of the group
std::set<oracle::Img> brute_delta(const Fixture& f, const Object& rep) {
  return oracle::orbit(oracle::closure(f.group), rep);
}

}  // namespace

TEST_CASE("gimel and xi edge sets from first principles") {
  for (const auto& f : {k5_s5(), k55_minus_matching()}) {
    for (const auto& o : three_arc_orbits(f.graph, f.group)) {
      CAPTURE(f.name);
      auto delta = brute_delta(f, o.representative);
      std::set<std::pair<Object, Object>> g_edges, x_edges;
      for (const auto& a : delta) {
        Object p{a[0], a[1], a[2]}, q{a[1], a[2], a[3]};
        p = unordered(p);
        q = unordered(q);
        g_edges.insert({std::min(p, q), std::max(p, q)});
        Object s{a[1], a[0]}, t{a[2], a[3]};
        x_edges.insert({std::min(s, t), std::max(s, t)});
      }
      auto g = gimel_construct(f.graph, f.group, o);
      auto x = xi_construct(f.graph, f.group, o);
      CHECK(g.graph.order() == s_paths(f.graph, 2).size());
      CHECK(x.graph.order() == 2 * f.graph.size());
      CHECK(labelled_edges(g, true) == g_edges);
      CHECK(labelled_edges(x, false) == x_edges);
      // blocks: 2-paths by middle vertex, arcs by tail
      for (std::size_t i = 0; i < g.labels.size(); ++i)
        for (std::size_t j = 0; j < g.labels.size(); ++j)
          CHECK((g.partition.block_of(i) == g.partition.block_of(j)) == (g.labels[i][1] == g.labels[j][1]));
      for (std::size_t i = 0; i < x.labels.size(); ++i)
        for (std::size_t j = 0; j < x.labels.size(); ++j)
          CHECK((x.partition.block_of(i) == x.partition.block_of(j)) == (x.labels[i][0] == x.labels[j][0]));
    }
  }
}

TEST_CASE("xi valencies on K55 minus a matching") {
  auto f = k55_minus_matching();
  auto x1 = xi_construct(f.graph, f.group, three_arc_orbit_of(f.graph, f.group, k55_delta1()));
  auto x2 = xi_construct(f.graph, f.group, three_arc_orbit_of(f.graph, f.group, k55_delta2()));
  // vertices are the 40 arcs; valency is (val - 1) times the first ell entry
  CHECK(x1.graph.order() == 40);
  CHECK(x1.graph.valency() == 3u);
  CHECK(x2.graph.order() == 40);
  CHECK(x2.graph.valency() == 6u);
}

TEST_CASE("gimel and psi agree") {
  for (const auto& f : {k5_s5(), k55_minus_matching()}) {
    for (const auto& o : three_arc_orbits(f.graph, f.group)) {
      auto g = gimel_construct(f.graph, f.group, o);
      auto p = psi_construct(f.graph, f.group, jmap(f.graph, o.members));
      auto bij = gimel_psi_bijection(f.graph, g, p);
      CHECK(is_isomorphism(g.graph, p.graph, bij));
    }
  }
}

TEST_CASE("constructions are rejected on bad input") {
  auto ch = chiral_k33();
  auto o = three_arc_orbits(ch.graph, ch.group)[0];
  CHECK_THROWS_AS(gimel_construct(ch.graph, ch.group, o), ContractError);
  CHECK_THROWS_AS(xi_construct(ch.graph, ch.group, o), ContractError);
  auto k5 = k5_s5();
  CHECK_THROWS_AS(gimel_construct(k5.graph, std::vector<Object>{{0, 1, 0, 1}}, nullptr), DomainError);
}

TEST_CASE("Pi on K8 with Theta_1 is 14 K4") {
  auto k8 = k8_agl32();
  auto c = pi_construct(k8.graph, k8.group, double_star_orbit(k8.graph, k8.group, k8_left(), k8_right(1)));
  CHECK(c.graph.order() == 56);
  CHECK(oracle::component_count(c.graph) == 14);
  for (const auto& comp : components(c.graph)) {
    REQUIRE(comp.size() == 4);
    for (auto u : comp)
      for (auto v : comp)
        if (u != v) CHECK(c.graph.adjacent(u, v));
  }
  auto c2 = pi_construct(k8.graph, k8.group, double_star_orbit(k8.graph, k8.group, k8_left(), k8_right(2)));
  CHECK(oracle::component_count(c2.graph) == 1);
  CHECK(c2.graph.valency() == 6u);
}

TEST_CASE("quotients of constructions recover the source") {
  auto k5 = k5_s5();
  for (const auto& o : three_arc_orbits(k5.graph, k5.group))
    for (const auto& c : {gimel_construct(k5.graph, k5.group, o), xi_construct(k5.graph, k5.group, o)}) {
      auto q = quotient_graph(c.graph, c.partition);
      CHECK(oracle::isomorphic(q, k5.graph));
    }
  auto k8 = k8_agl32();
  auto c = pi_construct(k8.graph, k8.group, double_star_orbit(k8.graph, k8.group, k8_left(), k8_right(2)));
  CHECK(oracle::isomorphic(quotient_graph(c.graph, c.partition), k8.graph));
  auto R = reconstruct_double_star(c.graph, *c.group, c.partition);
  CHECK(R.verified);
  CHECK(R.m_star == 1);
  CHECK(is_isomorphism(R.refined_quotient, R.pi.graph, R.iso));
}

TEST_CASE("self-paired finders") {
  for (const auto& f : {k5_s5(), k55_minus_matching(), k44_full(), cycle_dihedral(6), complete_symmetric(7)}) {
    CAPTURE(f.name);
    auto s = find_self_paired_3arc(f.graph, f.group);
    REQUIRE(s.orbit);
    CHECK(s.method == "constructive");
    auto brute = brute_delta(f, s.orbit->representative);
    const auto& r = s.orbit->representative;
    CHECK(brute.count(oracle::Img(r.rbegin(), r.rend())) == 1);
    if (s.witness) CHECK(s.witness->images().size() == f.graph.order());
  }
  auto k8 = k8_agl32();
  auto ds = find_self_paired_double_star(k8.graph, k8.group, star_orbit(k8.graph, k8.group, k8_left()));
  REQUIRE(ds.orbit);
  CHECK(ds.method == "constructive");
  CHECK(ds.orbit->self_paired);
  std::set<std::pair<Star, Star>> members(ds.orbit->members.begin(), ds.orbit->members.end());
  CHECK(members.count({ds.orbit->right, ds.orbit->left}) == 1);
}

TEST_CASE("chiral double stars are not self-paired") {
  auto ch = chiral_k33();
  auto o = three_arc_orbits(ch.graph, ch.group);
  REQUIRE(o.size() == 2);
  // the two orbits are each other's reversal
  const auto& r = o[0].representative;
  CHECK(o[1].contains(Object(r.rbegin(), r.rend())));
  auto s = find_self_paired_3arc(ch.graph, ch.group);
  CHECK_FALSE(s.orbit);
}
