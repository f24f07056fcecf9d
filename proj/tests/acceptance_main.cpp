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

// Runs the acceptance battery; prints one PASS/FAIL line per criterion.
// With -v every individual check is listed as well.

#include <cstdio>
#include <cstring>
#include <cstdlib>

#include "sgq/acceptance.hpp"

int main(int argc, char** argv) {
  bool verbose = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
    else only = std::atoi(argv[i]);
  }
  int failed = 0;
  for (int id = 1; id <= sgq::kCriteria; ++id) {
    if (only && id != only) continue;
    auto r = sgq::run_criterion(id);
    std::printf("criterion %d %-40s %s\n", r.id, r.title.c_str(), r.passed ? "PASS" : "FAIL");
    for (const auto& c : r.checks)
      if (verbose || c.rfind("FAIL", 0) == 0) std::printf("    %s\n", c.c_str());
    if (!r.passed) ++failed;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
