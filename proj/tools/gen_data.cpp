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

// Writes the fixture files under data/. Usage: sgq_gen_data <dir>

#include <filesystem>
#include <iostream>

#include "sgq/arcs.hpp"
#include "sgq/cycles.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/io.hpp"

using namespace sgq;

namespace {

void dump(const std::filesystem::path& dir, const std::string& graph_stem, const std::string& group_stem,
          const Fixture& f) {
  write_file_atomic((dir / (graph_stem + ".graph")).string(), format_graph(f.graph));
  write_file_atomic((dir / (group_stem + ".grp")).string(), format_group(f.group));
  if (f.partition) write_file_atomic((dir / (graph_stem + ".part")).string(), format_partition(*f.partition));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sgq_gen_data <dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  dump(dir, "k5", "s5", k5_s5());
  dump(dir, "k55m", "k55m", k55_minus_matching());
  dump(dir, "k8", "agl32", k8_agl32());
  dump(dir, "k77", "psl32wr", k77_psl32_wr());
  dump(dir, "chiral_k33", "chiral_k33", chiral_k33());
  dump(dir, "k44", "k44", k44_full());
  dump(dir, "c6", "d12", cycle_dihedral(6));
  dump(dir, "k4", "s4", complete_symmetric(4));
  {
    auto f = k55_minus_matching();
    auto cs = extract_cycle_set(f.graph, f.group, three_arc_orbit_of(f.graph, f.group, k55_delta1()));
    write_file_atomic((dir / "k55m_delta1.cycles").string(), format_cycles(cs.cycles));
  }
  {
    auto f = k5_s5();
    auto cs = extract_cycle_set(f.graph, f.group, three_arc_orbit_of(f.graph, f.group, {0, 1, 2, 0}));
    write_file_atomic((dir / "k5_triangles.cycles").string(), format_cycles(cs.cycles));
  }
  write_file_atomic((dir / "c6.cycles").string(), "0 1 2 3 4 5\n");
  write_file_atomic((dir / "psl2_11.grp").string(), format_group(psl2(11)));
  write_file_atomic((dir / "empty.graph").string(), "vertices 3\n");
  write_file_atomic((dir / "trivial3.grp").string(), "degree 3\n()\n");
  // point 7 on line 3 is out of range
  write_file_atomic((dir / "bad.grp").string(), "degree 5\n(0 1 2 3 4)\n(0 1 7)\n");
  return 0;
}
