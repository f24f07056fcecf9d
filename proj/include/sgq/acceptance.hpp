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

#include "sgq/group.hpp"

namespace sgq {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> checks;  // "ok: ..." or "FAIL: ..."
};

constexpr int kCriteria = 8;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

// Order of the group generated by gens, by closing the element set under
// right multiplication. Independent of the stabilizer chain.
std::uint64_t closure_order(const std::vector<Permutation>& gens, std::size_t degree, std::uint64_t limit);

}  // namespace sgq
