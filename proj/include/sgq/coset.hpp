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

#include <string>
#include <vector>

#include "sgq/graph.hpp"
#include "sgq/group.hpp"

namespace sgq {

struct CosetGraph {
  Graph graph;
  PermGroup action;                    // right multiplication on the cosets
  std::vector<Permutation> reps;       // least element of each coset
  std::vector<std::string> warnings;
};

// Vertices are the right cosets Hx, with Hx ~ Hy when x y^-1 lies in HzH.
// Throws ContractError when z lies in H or HzH is not closed under inverses.
CosetGraph coset_graph(const PermGroup& x, const PermGroup& h, const Permutation& z);

struct CosetData {
  PermGroup h;
  Permutation z;
  PermGroup p;                   // H meet H^z
  std::vector<Permutation> h_elements;  // sorted
  bool generates = false;        // <H, z> = X, so the coset graph is connected
};

// Subgroups H isomorphic to A4 or S4 (one per conjugacy class) with every
// involution z satisfying the matching conditions:
//   A4: P = H meet H^z is cyclic of order 3, z normalizes P and inverts it;
//   S4: P is isomorphic to S3 and N_X(P) = P x <z>.
std::vector<CosetData> search_coset_data(const PermGroup& x, const std::string& shape);

// The 3-arc (Hzg, H, Hz, Hzgz); g must lie in H but not in P.
Object coset_three_arc(const CosetGraph& cg, const CosetData& d, const Permutation& g);

}  // namespace sgq
