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

#include "doctest.h"
#include "oracle.hpp"
#include "sgq/arcs.hpp"
#include "sgq/error.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/iso.hpp"
#include "sgq/symmetry.hpp"

using namespace sgq;

namespace {

void arc_orbits_match_oracle(const Fixture& f, std::size_t cap) {
  auto elems = oracle::closure(f.group);
  auto r = analyze_symmetry(f.graph, f.group, static_cast<int>(cap));
  REQUIRE(r.arc_orbit_counts.size() == cap + 1);
  for (std::size_t s = 0; s <= cap; ++s)
    CHECK(r.arc_orbit_counts[s] == oracle::orbit_sizes(elems, oracle::arcs(f.graph, s)).size());
}

}  // namespace

TEST_CASE("K5 under S5") {
  auto f = k5_s5();
  auto r = analyze_symmetry(f.graph, f.group);
  CHECK(r.group_order == 120);
  CHECK(r.preserves_adjacency);
  CHECK(r.vertex_transitive);
  CHECK(r.max_s == 2);
  CHECK_FALSE(r.regular_at.has_value());
  REQUIRE(r.local);
  CHECK(r.local->tag == "S4");
  CHECK(r.faithful);
  arc_orbits_match_oracle(f, 4);
}

TEST_CASE("Petersen is 3-arc-regular") {
  Fixture f{"petersen", petersen_graph(), automorphism_group(petersen_graph()), std::nullopt};
  auto r = analyze_symmetry(f.graph, f.group);
  CHECK(r.max_s == 3);
  CHECK(r.regular_at == 3);
  CHECK(is_s_arc_regular(f.graph, f.group, 3));
  CHECK_FALSE(is_s_arc_regular(f.graph, f.group, 2));
  arc_orbits_match_oracle(f, 4);
}

TEST_CASE("cycle, K8 and the chiral K33") {
  auto c = cycle_dihedral(6);
  auto r = analyze_symmetry(c.graph, c.group);
  CHECK(r.max_s == 4);  // capped; a cycle is s-arc-transitive for all s
  CHECK(r.regular_at == 1);
  auto k8 = k8_agl32();
  auto r8 = analyze_symmetry(k8.graph, k8.group, 3);
  CHECK(r8.max_s == 2);
  REQUIRE(r8.local);
  CHECK(r8.local->order == 168);
  CHECK(r8.local->transitivity == 2);
  auto ch = chiral_k33();
  arc_orbits_match_oracle(ch, 3);
  auto rc = analyze_symmetry(ch.graph, ch.group);
  CHECK(rc.max_s == 2);
  CHECK(rc.regular_at == 2);
}

TEST_CASE("non-invariant group and contract errors") {
  auto c5 = cycle_graph(5);
  PermGroup bad(5, {Permutation::from_cycles("(0 2)", 5)});
  auto r = analyze_symmetry(c5, bad);
  CHECK_FALSE(r.preserves_adjacency);
  CHECK(r.max_s == -1);
  CHECK(r.arc_orbit_counts.empty());
  CHECK_THROWS_AS(is_s_arc_regular(c5, PermGroup::trivial(5), 1), ContractError);
  CHECK_THROWS_AS(analyze_symmetry(c5, symmetric_group(4)), ContractError);
}

TEST_CASE("3-arc orbits against brute force") {
  for (const auto& f : {k5_s5(), k55_minus_matching(), chiral_k33(), k44_full()}) {
    CAPTURE(f.name);
    auto elems = oracle::closure(f.group);
    auto expect = oracle::orbit_sizes(elems, oracle::arcs(f.graph, 3));
    auto orbits = three_arc_orbits(f.graph, f.group);
    std::vector<std::size_t> sizes;
    for (const auto& o : orbits) {
      sizes.push_back(o.size());
      auto brute = oracle::orbit(elems, o.representative);
      CHECK(brute.size() == o.size());
      CHECK(o.representative == *brute.begin());  // lex-least
      oracle::Img rev(o.representative.rbegin(), o.representative.rend());
      CHECK(o.self_paired == (brute.count(rev) > 0));
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == expect);
  }
}

TEST_CASE("frozen 3-arc orbit data") {
  auto k5 = k5_s5();
  auto o = three_arc_orbits(k5.graph, k5.group);
  REQUIRE(o.size() == 2);
  CHECK(o[0].representative == Object{0, 1, 2, 0});
  CHECK(o[0].size() == 60);
  CHECK(o[0].ell == std::vector<std::size_t>{1, 2});
  CHECK(o[1].size() == 120);
  CHECK(o[1].ell == std::vector<std::size_t>{2, 1});
  auto k55 = k55_minus_matching();
  CHECK(three_arc_orbit_of(k55.graph, k55.group, k55_delta1()).ell == std::vector<std::size_t>{1, 2});
  CHECK(three_arc_orbit_of(k55.graph, k55.group, k55_delta2()).ell == std::vector<std::size_t>{2, 1});
  auto ch = chiral_k33();
  for (const auto& c : three_arc_orbits(ch.graph, ch.group)) {
    CHECK(c.size() == 36);
    CHECK_FALSE(c.self_paired);
  }
}
