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

#include "doctest.h"
#include "oracle.hpp"
#include "sgq/arcs.hpp"
#include "sgq/coset.hpp"
#include "sgq/cycles.hpp"
#include "sgq/error.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/symmetry.hpp"

using namespace sgq;

namespace {

// how many listed cycles contain each 2-path (as a set of three consecutive vertices)
std::map<Object, int> two_path_cover(const std::vector<Object>& cycles) {
  std::map<Object, int> cover;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      Object p{c[i], c[(i + 1) % c.size()], c[(i + 2) % c.size()]};
      if (p[2] < p[0]) std::swap(p[0], p[2]);
      ++cover[p];
    }
  return cover;
}

}  // namespace

TEST_CASE("near polygon verification") {
  auto c6 = cycle_graph(6);
  auto ok = verify_near_ngonal(c6, {{0, 1, 2, 3, 4, 5}});
  CHECK(ok.ok);
  CHECK(ok.n == 6);
  auto k5 = complete_graph(5);
  CHECK_FALSE(verify_near_ngonal(k5, {{0, 1, 2}}).ok);
  CHECK_FALSE(verify_near_ngonal(c6, {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}).ok);  // 2-paths twice
  CHECK_FALSE(verify_near_ngonal(c6, {{0, 2, 1, 3, 4, 5}}).ok);                      // not a cycle
  CHECK_FALSE(verify_near_ngonal(c6, {}).ok);
  CHECK_FALSE(verify_near_ngonal(disjoint_copies(c6, 2), {{0, 1, 2, 3, 4, 5}}).ok);
}

TEST_CASE("cycle extraction on K5") {
  auto f = k5_s5();
  auto o = three_arc_orbits(f.graph, f.group)[0];
  REQUIRE(o.ell.front() == 1);
  auto cs = extract_cycle_set(f.graph, f.group, o);
  CHECK(cs.m == 10);
  CHECK(cs.n == 3);
  CHECK(cs.m * cs.n == 30);
  CHECK(cs.branch == "complete");
  CHECK(cs.unique_cover);
  CHECK(cs.dihedral);
  CHECK(cs.covers_delta);
  for (auto [p, k] : two_path_cover(cs.cycles)) CHECK(k == 1);
  CHECK(two_path_cover(cs.cycles).size() == s_paths(f.graph, 2).size());
}

TEST_CASE("cycle extraction on K55 minus a matching") {
  auto f = k55_minus_matching();
  auto o = three_arc_orbit_of(f.graph, f.group, k55_delta1());
  auto cs = extract_cycle_set(f.graph, f.group, o);
  CHECK(cs.m * cs.n == 60);
  CHECK(cs.n == 6);
  CHECK(cs.branch == "near-polygonal");
  REQUIRE(cs.near);
  CHECK(cs.near->ok);
  auto cover = two_path_cover(cs.cycles);
  CHECK(cover.size() == s_paths(f.graph, 2).size());
  for (auto [p, k] : cover) CHECK(k == 1);
  // every 3-arc of Delta lies on an extracted cycle
  std::set<Object> on_cycles;
  for (const auto& c : cs.cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int dir : {1, -1}) {
        Object a;
        for (int j = 0; j < 4; ++j) a.push_back(c[(i + c.size() + dir * j) % c.size()]);
        on_cycles.insert(a);
      }
  for (const auto& a : o.members) CHECK(on_cycles.count(a) == 1);
  CHECK_THROWS_AS(extract_cycle_set(f.graph, f.group, three_arc_orbit_of(f.graph, f.group, k55_delta2())),
                  ContractError);
}

TEST_CASE("coset graph of S3 over the trivial subgroup") {
  auto s3 = symmetric_group(3);
  auto z = Permutation::from_cycles("(0 1)", 3);
  auto cg = coset_graph(s3, PermGroup::trivial(3), z);
  CHECK(cg.graph.order() == 6);
  CHECK(cg.graph.valency() == 1u);
  CHECK(cg.warnings.empty());
  auto z3 = Permutation::from_cycles("(0 1 2)", 3);
  // H z H = {z} is not closed under inverses
  CHECK_THROWS_AS(coset_graph(s3, PermGroup::trivial(3), z3), ContractError);
  PermGroup h(3, {z});
  CHECK_THROWS_AS(coset_graph(s3, h, z), ContractError);  // z in H
  CHECK_THROWS_AS(coset_graph(s3, PermGroup::trivial(4), z), ContractError);
}

TEST_CASE("coset data searches") {
  CHECK(search_coset_data(psl2(5), "S4").empty());  // A5 has no S4
  setenv("SGQ_MAX_ORDER", "100", 1);
  CHECK_THROWS_AS(search_coset_data(psl2(11), "A4"), SizeError);
  unsetenv("SGQ_MAX_ORDER");

  auto x = psl2(11);
  auto hits = search_coset_data(x, "A4");
  REQUIRE_FALSE(hits.empty());
  for (const auto& d : hits) {
    CHECK(d.h.order() == 12);
    CHECK(d.p.order() == 3);
    CHECK(d.z.order() == 2);
    CHECK_FALSE(d.h.contains(d.z));
    CHECK_FALSE(d.generates);
    auto cg = coset_graph(x, d.h, d.z);
    CHECK(cg.graph.order() == 55);
    CHECK(cg.graph.valency() == 4u);
    CHECK(oracle::component_count(cg.graph) == 11);
  }

  auto y = psl2(23);
  auto s4 = search_coset_data(y, "S4");
  REQUIRE_FALSE(s4.empty());
  const auto& d = s4.front();
  CHECK(d.generates);
  auto cg = coset_graph(y, d.h, d.z);
  CHECK(cg.graph.order() == 253);
  CHECK(cg.graph.valency() == 4u);
  CHECK(is_connected(cg.graph));
  CHECK(is_s_arc_transitive(cg.graph, cg.action, 2));
}

TEST_CASE("coset 3-arc is a 3-arc") {
  auto y = psl2(23);
  auto d = search_coset_data(y, "S4").front();
  auto cg = coset_graph(y, d.h, d.z);
  for (const auto& g : d.h_elements) {
    if (d.p.contains(g)) continue;
    auto a = coset_three_arc(cg, d, g);
    REQUIRE(a.size() == 4);
    CHECK(cg.graph.adjacent(a[0], a[1]));
    CHECK(cg.graph.adjacent(a[1], a[2]));
    CHECK(cg.graph.adjacent(a[2], a[3]));
    CHECK(a[0] != a[2]);
    CHECK(a[1] != a[3]);
  }
}
