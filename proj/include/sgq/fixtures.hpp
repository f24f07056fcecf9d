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

// Named graph/group pairs used by the tests, the acceptance battery and the
// files under data/.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgq/graph.hpp"
#include "sgq/group.hpp"
#include "sgq/quotient.hpp"
#include "sgq/stars.hpp"

namespace sgq {

struct Fixture {
  std::string name;
  Graph graph;
  PermGroup group;
  std::optional<Partition> partition;
};

PermGroup symmetric_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);  // on the n-cycle 0..n-1

Fixture complete_symmetric(std::size_t n);   // K_n with S_n
Fixture cycle_dihedral(std::size_t n);       // C_n with D_2n
Fixture k5_s5();

// K_{5,5} minus a perfect matching. Vertex i (1..5) is i-1 and i' is i+4;
// the group is S5 acting on both sides together with the side swap.
Fixture k55_minus_matching();
Object k55_delta1();  // (1,2',3,1')
Object k55_delta2();  // (1,2',3,4')

// K8 on the vectors of F_2^3, vertex i = a1 + 2 a2 + 4 a3, with AGL(3,2).
Fixture k8_agl32();
Permutation k8_t(int i);           // i = 1 or 2
Star k8_left();                     // centre v0, leaves {v2, v4, v6}
Star k8_right(int i);               // centre v4, leaves L^{t_i}

// K_{7,7}: left vertex l_i is i-1, right vertex r_i is i+6, with
// PSL(3,2) wr Z2 (labels i = 4 a1 + 2 a2 + a3).
Fixture k77_psl32_wr();
Star k77_left();   // centre l1, leaves {r1, r2, r3}
Star k77_right();  // centre r1, leaves {l1, l2, l3}

// K_{3,3} with an arc-regular-on-2-arcs group of order 36 whose 3-arc orbits
// are not self-paired.
Fixture chiral_k33();

Fixture k44_full();  // K_{4,4} with S4 wr Z2

// PSL(2,p) on the p+1 points of the projective line (infinity is p).
PermGroup psl2(std::size_t p);

// Case (d) style lift of a 2-arc-transitive graph: vertices (arc, i) for
// i in {0,1,2}, blocks by arc tail, and (t,s,i) ~ (s,t,j) following the
// pattern "3K2" (i = j), "K33-3K2" (i != j) or "K33" (all i, j).
Fixture arc_lift(const Fixture& sigma, const std::string& pattern);

// Each vertex of g doubled; (v,a) ~ (u,b) whenever v ~ u. Vertex (v,a) is
// 2v + a. The group lifts x and adds the swap of the two copies of each
// vertex. The partition, when given, is lifted blockwise.
Fixture blow_up(const Fixture& base);

}  // namespace sgq
