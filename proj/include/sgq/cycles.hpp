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

namespace sgq {

struct NearPolygonCheck {
  bool ok = false;
  std::string reason;
  std::optional<Object> witness;  // offending 2-path or cycle
  std::size_t n = 0;
};

// Connected, girth at least 4, every cycle of one length n, and every 2-arc
// in exactly one listed cycle.
NearPolygonCheck verify_near_ngonal(const Graph& g, const std::vector<Object>& cycles);

struct CycleSet {
  std::vector<Object> cycles;  // canonical vertex sequences, sorted
  std::size_t m = 0;
  std::size_t n = 0;
  bool count_matches = false;     // m n = e (valency - 1)
  bool one_orbit = false;
  bool dihedral = false;          // every cycle stabilizer induces D_2n on it
  bool covers_delta = false;      // the 3-arcs of the cycles are exactly delta
  bool unique_cover = false;      // every 2-path lies in exactly one cycle
  std::string branch;             // complete | near-polygonal | neither
  std::optional<NearPolygonCheck> near;
};

// Requires the first entry of the orbit's l-vector to be 1.
CycleSet extract_cycle_set(const Graph& g, const PermGroup& x, const ThreeArcOrbit& delta);

}  // namespace sgq
