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

#include <optional>
#include <string>
#include <vector>

#include "sgq/graph.hpp"
#include "sgq/group.hpp"
#include "sgq/quotient.hpp"

namespace sgq {

// A graph built from a symmetric source graph, with its natural partition
// and the induced action of the source group.
struct Construction {
  std::string kind;  // gimel | psi | xi | pi
  Graph graph;
  Partition partition;
  std::vector<Object> labels;  // vertex i stands for labels[i]
  std::optional<PermGroup> group;
};

struct ThreeArcOrbit {
  Object representative;       // lex-least member
  std::vector<Object> members;  // sorted
  bool self_paired = false;
  std::vector<std::size_t> ell;  // first entry: orbit of the last vertex

  std::size_t size() const { return members.size(); }
  bool contains(const Object& arc) const;
};

Object reversed(const Object& o);

// Orbit sizes of the stabilizer of (t1, t, s) on the neighbours of s other
// than t; the orbit holding the fourth vertex comes first, the rest ascend.
std::vector<std::size_t> ell_vector(const Graph& g, const PermGroup& x, const Object& arc3);

std::vector<ThreeArcOrbit> three_arc_orbits(const Graph& g, const PermGroup& x);
ThreeArcOrbit three_arc_orbit_of(const Graph& g, const PermGroup& x, const Object& arc3);

struct SelfPairedSearch {
  std::optional<ThreeArcOrbit> orbit;
  std::string method;  // constructive | scan
  std::optional<Permutation> witness;  // element reversing the representative found
};

// Even valency: build the orbit from an odd cycle of y^2 where y swaps an
// arc. Otherwise scan all orbits.
SelfPairedSearch find_self_paired_3arc(const Graph& g, const PermGroup& x);

// Lexicographically least element of x mapping the tuple `from` to `to`.
std::optional<Permutation> least_element_mapping(const PermGroup& x, const Object& from, const Object& to);

// Vertices are the 2-paths; [a0 a1 a2] ~ [a1 a2 a3] for each 3-arc in delta.
Construction gimel_construct(const Graph& sigma, const std::vector<Object>& delta,
                             const PermGroup* x = nullptr);
Construction gimel_construct(const Graph& sigma, const PermGroup& x, const ThreeArcOrbit& delta);

// J(sigma): pairs of 2-paths ([t1 t t2], [s1 s s2]) with t ~ s crossing.
std::vector<Object> j_pairs(const Graph& sigma);
std::vector<Object> j_orbit(const Graph& sigma, const PermGroup& x, const Object& pair);
// Vertices are the 2-paths; pairs in lambda are edges.
Construction psi_construct(const Graph& sigma, const PermGroup& x, const std::vector<Object>& lambda);
// Tetravalent sources: the complementary 2-paths of each 3-arc of delta.
std::vector<Object> jmap(const Graph& sigma, const std::vector<Object>& delta);
// The bijection [t1 t t2] -> [t3 t t4] between the 2-path vertex sets.
std::vector<Vertex> gimel_psi_bijection(const Graph& sigma, const Construction& gimel, const Construction& psi);

// Vertices are the arcs; (t,t1) ~ (s,s1) when (t1,t,s,s1) is in delta.
Construction xi_construct(const Graph& sigma, const PermGroup& x, const ThreeArcOrbit& delta);

}  // namespace sgq
