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

// JSON forms of the reports. Schemas live in docs/schemas.

#pragma once

#include <vector>

#include "json.hpp"
#include "sgq/acceptance.hpp"
#include "sgq/arcs.hpp"
#include "sgq/cycles.hpp"
#include "sgq/quotient.hpp"
#include "sgq/stars.hpp"
#include "sgq/symmetry.hpp"

namespace sgq {

using Json = nlohmann::ordered_json;

Json to_json(const SymmetryReport& r);
Json to_json(const QuotientReport& r);
Json to_json(const ThreeArcOrbit& o, std::size_t index);
Json to_json(const NearPolygonCheck& c);
Json to_json(const CriterionResult& r);

// Sidecar written next to a construction's .graph and .part files.
Json construction_sidecar(const Construction& c, const Graph& source, const Object& representative,
                          const std::vector<std::size_t>& ell, bool self_paired);

}  // namespace sgq
