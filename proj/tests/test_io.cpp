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

#include <filesystem>

#include "doctest.h"
#include "sgq/error.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/io.hpp"

using namespace sgq;

TEST_CASE("group files") {
  auto g = parse_group("# S4\ndegree 4\n(0 1 2 3)\n\n(0 1)\n");
  CHECK(g.degree() == 4);
  CHECK(g.order() == 24);
  CHECK(parse_group("degree 3\n()\n").order() == 1);
  auto round = parse_group(format_group(k8_agl32().group));
  CHECK(round.order() == 1344);
  try {
    parse_group("degree 3\n(0 1)\n(0 5)\n", "x.grp");
    FAIL("accepted a point out of range");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("x.grp:3") == 0);
  }
  CHECK_THROWS_AS(parse_group("(0 1)\n"), ParseError);
  CHECK_THROWS_AS(parse_group("degree 3\n(0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_group("degree 3\n(0 1 0)\n"), ParseError);
}

TEST_CASE("graph files") {
  auto g = parse_graph("vertices 4\n0 1\n# comment\n1 2\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  auto pet = petersen_graph();
  CHECK(parse_graph(format_graph(pet)) == pet);
  try {
    parse_graph("vertices 3\n0 1\n1 0\n");
    FAIL("accepted a duplicate edge");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("vertices 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices 3\n0 x\n"), ParseError);
  CHECK(graph_hash(pet) == graph_hash(parse_graph(format_graph(pet))));
  CHECK(graph_hash(pet) != graph_hash(complete_graph(10)));
  CHECK(graph_hash(pet).size() == 16);
}

TEST_CASE("partition and cycle files") {
  auto p = parse_partition("0 3\n1 4\n2 5\n", 6);
  CHECK(p.size() == 3);
  CHECK(parse_partition(format_partition(p), 6) == p);
  CHECK_THROWS_AS(parse_partition("0 1\n1 2\n", 3), ParseError);
  CHECK_THROWS_AS(parse_partition("0 1\n", 3), ParseError);
  auto c = parse_cycles("0 1 2 3 4 5\n");
  CHECK(c.size() == 1);
  CHECK(parse_cycles(format_cycles(c)) == c);
  CHECK_THROWS_AS(parse_cycles("0 1\n"), ParseError);
}

TEST_CASE("files on disk") {
  auto dir = std::filesystem::temp_directory_path() / "sgq_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "k5.graph").string();
  write_file_atomic(path, format_graph(complete_graph(5)));
  CHECK(read_graph(path) == complete_graph(5));
  write_file_atomic(path, format_graph(cycle_graph(5)));
  CHECK(read_graph(path) == cycle_graph(5));
  CHECK_THROWS_AS(read_graph((dir / "missing.graph").string()), IoError);
  std::filesystem::remove_all(dir);
}
