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

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sgq/action.hpp"
#include "sgq/error.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/group.hpp"

using namespace sgq;

TEST_CASE("permutation algebra") {
  auto a = Permutation::from_cycles("(0 1 2)", 4);
  auto b = Permutation::from_cycles("(2 3)", 4);
  // left to right: 0 -> 1 under a, then 1 -> 1 under b
  CHECK((a * b)(0) == 1);
  CHECK((a * b)(1) == 3);
  CHECK((a * b).to_string() == "(0 1 3 2)");
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(3).is_identity());
  CHECK(Permutation::from_cycles("()", 3).is_identity());
  CHECK(Permutation::from_cycles(a.to_string(), 4) == a);
}

TEST_CASE("orders against closure") {
  CHECK(symmetric_group(5).order() == 120);
  CHECK(oracle::closure(symmetric_group(5)).size() == 120);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(oracle::closure(dihedral_group(6)).size() == 12);

  auto agl = k8_agl32().group;
  CHECK(agl.order() == 1344);
  CHECK(oracle::closure(agl).size() == 1344);

  auto p = psl2(7);
  CHECK(p.order() == 168);
  CHECK(oracle::closure(p).size() == 168);
  CHECK(psl2(11).order() == 660);

  CHECK(chiral_k33().group.order() == oracle::closure(chiral_k33().group).size());
}

TEST_CASE("membership agrees with closure") {
  auto agl = k8_agl32().group;
  auto elems = oracle::closure(agl);
  std::mt19937 rng(7);
  std::vector<Point> img(8);
  std::iota(img.begin(), img.end(), 0u);
  for (int t = 0; t < 500; ++t) {
    std::shuffle(img.begin(), img.end(), rng);
    bool in = elems.count(img) > 0;
    CHECK(agl.contains(Permutation(img)) == in);
  }
  for (const auto& e : elems) REQUIRE(agl.contains(Permutation(e)));
}

TEST_CASE("stabilizers and transitivity") {
  auto s5 = symmetric_group(5);
  CHECK(s5.point_stabilizer(0).order() == 24);
  CHECK(s5.pointwise_stabilizer({0, 1}).order() == 6);
  CHECK(setwise_stabilizer(s5, {0, 1}).order() == 12);
  CHECK(tuple_stabilizer(s5, {3, 1}).order() == 6);
  CHECK(transitivity(s5).degree == 5);
  CHECK(transitivity(dihedral_group(5)).degree == 1);
  CHECK_FALSE(transitivity(dihedral_group(6)).regular);
  auto agl = k8_agl32().group;
  CHECK(transitivity(agl).degree == 3);
  CHECK(transitivity(agl).regular == false);
  CHECK(transitivity(psl2(7)).degree == 2);
}

TEST_CASE("identify by element orders") {
  CHECK(identify(symmetric_group(4)).tag == "S4");
  CHECK(identify(PermGroup(4, {Permutation::from_cycles("(0 1 2)", 4), Permutation::from_cycles("(0 1)(2 3)", 4)}))
            .tag == "A4");
  CHECK(identify(dihedral_group(7)).tag == "dihedral(7)");
  CHECK(identify(k8_agl32().group.point_stabilizer(0)).tag == "PSL32");
  CHECK(identify(psl2(7)).tag == "PSL32");
  CHECK(identify(symmetric_group(5)).tag.rfind("other", 0) == 0);
}

TEST_CASE("kernel and induced action") {
  // D8 on the two diagonals of the square 0123
  auto d8 = dihedral_group(4);
  ActionDomain diag(DomainKind::k_subsets, Shape::set(), {{0, 2}, {1, 3}});
  CHECK(kernel_of_action(d8, diag).order() == 4);
  CHECK(induced_group(d8, diag).order() == 2);
  // S4 on 2-subsets is faithful
  auto s4 = symmetric_group(4);
  ActionDomain pairs(DomainKind::k_subsets, Shape::set(), {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(kernel_of_action(s4, pairs).order() == 1);
  CHECK(orbit(s4, pairs, {0, 1}).size() == 6);
  CHECK(stabilizer(s4, pairs, {0, 1}).order() == 4);
}

TEST_CASE("enumeration bound") {
  setenv("SGQ_MAX_ORDER", "100", 1);
  CHECK_THROWS_AS(symmetric_group(5).elements(), SizeError);
  setenv("SGQ_MAX_ORDER", "1000", 1);
  CHECK(symmetric_group(5).elements().size() == 120);
  unsetenv("SGQ_MAX_ORDER");
}
