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

#include "sgq/report.hpp"

#include "sgq/io.hpp"

namespace sgq {

Json to_json(const SymmetryReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["preserves_adjacency"] = r.preserves_adjacency;
  j["vertex_transitive"] = r.vertex_transitive;
  j["max_s_arc_transitive"] = r.max_s;
  j["arc_orbit_counts"] = r.arc_orbit_counts;
  j["s_arc_regular_at"] = r.regular_at ? Json(*r.regular_at) : Json(nullptr);
  if (r.local)
    j["local_group"] = {{"order", r.local->order}, {"transitivity", r.local->transitivity}, {"tag", r.local->tag}};
  else
    j["local_group"] = nullptr;
  j["faithful"] = r.faithful;
  return j;
}

Json to_json(const QuotientReport& r) {
  const auto& p = r.params;
  Json j;
  j["params"] = {{"v", p.v}, {"k", p.k}, {"r", p.r}, {"b", p.b}};
  j["lambda"] = p.lambda ? Json(*p.lambda) : Json(nullptr);
  j["pattern"] = p.pattern;
  j["m"] = r.m;
  j["m_star"] = r.m_star ? Json(*r.m_star) : Json(nullptr);
  j["multicover"] = p.multicover;
  j["quotient_2at"] = r.quotient_2at;
  j["case"] = r.case_label;
  j["subcase"] = r.subcase.empty() ? Json(nullptr) : Json(r.subcase);
  j["local_group"] = {{"order", r.local_order}, {"tag", r.local_tag}};
  j["diagnostics"] = r.diagnostics;
  return j;
}

Json to_json(const ThreeArcOrbit& o, std::size_t index) {
  return Json{{"index", index},
              {"representative", o.representative},
              {"size", o.size()},
              {"ell", o.ell},
              {"self_paired", o.self_paired}};
}

Json to_json(const NearPolygonCheck& c) {
  Json j;
  j["certified"] = c.ok;
  j["n"] = c.n;
  j["reason"] = c.reason;
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

Json to_json(const CriterionResult& r) {
  return Json{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"checks", r.checks}};
}

Json construction_sidecar(const Construction& c, const Graph& source, const Object& representative,
                          const std::vector<std::size_t>& ell, bool self_paired) {
  Json j;
  j["construction"] = c.kind;
  j["source_graph_hash"] = graph_hash(source);
  j["orbit_representative"] = representative;
  j["ell"] = ell;
  j["self_paired"] = self_paired;
  j["vertices"] = c.graph.order();
  j["edges"] = c.graph.size();
  return j;
}

}  // namespace sgq
