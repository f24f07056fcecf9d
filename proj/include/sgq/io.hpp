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

// Plain-text formats:
//   .grp     "degree n", then one generator per line in cycle notation
//   .graph   "vertices n", then one edge "u v" per line
//   .part    one block per line
//   .cycles  one cycle per line, first vertex not repeated
// Blank lines and lines starting with '#' are ignored everywhere.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgq/graph.hpp"
#include "sgq/group.hpp"
#include "sgq/quotient.hpp"

namespace sgq {

std::string read_file(const std::string& path);
// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);

PermGroup parse_group(const std::string& text, const std::string& source = "<group>");
Graph parse_graph(const std::string& text, const std::string& source = "<graph>");
Partition parse_partition(const std::string& text, std::size_t ground_size, const std::string& source = "<partition>");
std::vector<Object> parse_cycles(const std::string& text, const std::string& source = "<cycles>");

PermGroup read_group(const std::string& path);
Graph read_graph(const std::string& path);
Partition read_partition(const std::string& path, std::size_t ground_size);
std::vector<Object> read_cycles(const std::string& path);

std::string format_group(const PermGroup& g);
std::string format_graph(const Graph& g);
std::string format_partition(const Partition& p);
std::string format_cycles(const std::vector<Object>& cycles);

// 64-bit FNV-1a of the canonical .graph text, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace sgq
