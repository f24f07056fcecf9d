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

#include "sgq/arcs.hpp"
#include "sgq/graph.hpp"
#include "sgq/group.hpp"
#include "sgq/quotient.hpp"

namespace sgq {

// A centre with a set of its neighbours.
struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;  // sorted

  Object object() const;
  static Star from_object(const Object& o);
  bool operator==(const Star& o) const { return center == o.center && leaves == o.leaves; }
  bool operator<(const Star& o) const {
    return center != o.center ? center < o.center : leaves < o.leaves;
  }
};

Star make_star(const Graph& g, Vertex center, std::vector<Vertex> leaves);

struct StarOrbit {
  Star representative;
  std::vector<Star> members;  // sorted
  bool symmetric = false;     // stabilizer of a star is transitive on its leaves
  std::size_t k() const { return representative.leaves.size(); }
};

StarOrbit star_orbit(const Graph& g, const PermGroup& x, const Star& s);

// Points: neighbours of tau; blocks: the orbit's stars centred at tau.
BlockDesign star_design(const Graph& g, const StarOrbit& s, Vertex tau);

struct DoubleStarOrbit {
  Star left, right;  // representative pair
  std::vector<std::pair<Star, Star>> members;  // sorted
  bool self_paired = false;
  std::vector<Star> stars;  // every star occurring in a member
};

// Requires right.center in left.leaves and left.center in right.leaves.
DoubleStarOrbit double_star_orbit(const Graph& g, const PermGroup& x, const Star& left, const Star& right);

struct DoubleStarSearch {
  std::optional<DoubleStarOrbit> orbit;
  std::string method;  // constructive | scan
};

// Odd reduced replication: build from an odd cycle of y^2 on the stars at tau
// containing sigma, where y swaps the arc (tau, sigma). Otherwise scan.
DoubleStarSearch find_self_paired_double_star(const Graph& g, const PermGroup& x, const StarOrbit& s);
// Every double-star orbit whose left star is the orbit representative.
std::vector<DoubleStarOrbit> double_star_orbits(const Graph& g, const PermGroup& x, const StarOrbit& s);

// Vertices are the stars; pairs in the orbit are edges; blocks group by centre.
Construction pi_construct(const Graph& sigma, const PermGroup& x, const DoubleStarOrbit& theta);

struct Reconstruction {
  Graph quotient;
  PermGroup quotient_group;
  DoubleStarOrbit theta;
  Construction pi;
  std::size_t m_star = 0;
  Partition refinement;        // blocks B_v
  Graph refined_quotient;
  std::vector<Vertex> iso;     // refined quotient -> pi graph
  bool verified = false;
};

Reconstruction reconstruct_double_star(const Graph& g, const PermGroup& x, const Partition& p);

}  // namespace sgq
