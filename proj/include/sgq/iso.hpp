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

namespace sgq {

struct IsoResult {
  std::optional<std::vector<Vertex>> map;  // map[v] is the image in the second graph
  std::string certificate;                 // why not, when map is empty
  explicit operator bool() const { return map.has_value(); }
};

IsoResult find_isomorphism(const Graph& a, const Graph& b);
// Colour-preserving variant; colours are arbitrary labels compared for equality.
IsoResult find_isomorphism(const Graph& a, const std::vector<std::uint32_t>& colors_a,
                           const Graph& b, const std::vector<std::uint32_t>& colors_b);

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map);

PermGroup automorphism_group(const Graph& g, std::size_t max_vertices = 2000);

}  // namespace sgq
