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

#include "sgq/action.hpp"
#include "sgq/graph.hpp"
#include "sgq/group.hpp"

namespace sgq {

// Disjoint covering blocks, each sorted, ordered by least vertex.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t ground_size, std::vector<std::vector<Vertex>> blocks);

  std::size_t ground_size() const { return block_of_.size(); }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& operator[](std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }
  bool operator==(const Partition& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

enum class PartitionStatus { valid, not_covering, trivial, not_invariant, not_independent };

struct PartitionCheck {
  PartitionStatus status = PartitionStatus::valid;
  std::string detail;
  std::optional<std::size_t> generator;  // witness for not_invariant
  std::optional<std::size_t> block;      // offending block
  bool ok() const { return status == PartitionStatus::valid; }
};

PartitionCheck validate_partition(const Graph& g, const PermGroup& x,
                                  const std::vector<std::vector<Vertex>>& blocks);

Graph quotient_graph(const Graph& g, const Partition& p);
ActionDomain block_domain(const Partition& p);
// Action on block indices, which are the quotient's vertices.
PermGroup block_action(const PermGroup& x, const Partition& p);

// Blocks of the quotient adjacent to the block of v through edges at v.
std::vector<std::size_t> neighbour_blocks(const Graph& g, const Partition& p, Vertex v);
// Vertices of block b with a neighbour in block c.
std::vector<Vertex> trace(const Graph& g, const Partition& p, std::size_t b, std::size_t c);

struct LocalParams {
  std::size_t v = 0;  // block size
  std::size_t k = 0;  // trace size of an adjacent block
  std::size_t r = 0;  // blocks met by one vertex
  std::size_t b = 0;  // quotient valency
  std::optional<std::size_t> lambda;  // empty when nonconstant or undefined
  bool lambda_nonconstant = false;
  bool multicover = false;
  std::string pattern;  // bipartite graph between two adjacent blocks
};

// Throws ContractError when v, k, r or b is not constant.
LocalParams local_parameters(const Graph& g, const Partition& p);

// Incidence structure; blocks hold positions into points and may repeat.
struct BlockDesign {
  std::vector<Point> points;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Object> block_labels;

  std::size_t v() const { return points.size(); }
  std::size_t b() const { return blocks.size(); }
  std::optional<std::size_t> k() const;
  std::optional<std::size_t> r() const;
  std::size_t multiplicity() const;  // copies of each point set (max)
  bool is_one_design() const { return k() && r(); }
  std::optional<std::size_t> pair_count() const;  // constant count of blocks on two points
  BlockDesign dual() const;
  BlockDesign reduced() const;
};

// Points are the vertices of block `block`; one design block per adjacent block.
BlockDesign block_design(const Graph& g, const Partition& p, std::size_t block);
bool design_flag_transitive(const Graph& g, const PermGroup& x, const Partition& p, std::size_t block);
// Point bijection carrying blocks to blocks, if any.
std::optional<std::vector<std::size_t>> design_isomorphism(const BlockDesign& a, const BlockDesign& b);
BlockDesign fano_plane();

struct DualMultiplicity {
  std::size_t m_star = 0;
  Partition refinement;  // the blocks B_v
};

DualMultiplicity dual_multiplicity(const Graph& g, const Partition& p);

struct RefinementReport {
  bool hypothesis_holds = false;
  std::string failure;
  std::size_t lambda = 0;
  bool quotient_2at = false;
  std::vector<Object> delta;  // 3-arcs of the quotient
  bool delta_self_paired_orbit = false;
  std::optional<Partition> refinement;     // when lambda >= 2
  std::optional<std::vector<Vertex>> iso;  // onto the 2-path graph of the quotient
};

// Requires r = 2 and b >= 3.
RefinementReport quotient_refinement(const Graph& g, const PermGroup& x, const Partition& p);

struct QuotientReport {
  LocalParams params;
  std::size_t m = 0;
  std::optional<std::size_t> m_star;
  bool quotient_2at = false;
  bool faithful_on_blocks = false;
  std::string case_label;  // a | b | c | d | unmatched | not-applicable
  std::string subcase;     // e.g. c.2; empty when none
  std::uint64_t local_order = 0;
  std::string local_tag;
  std::vector<std::string> diagnostics;
};

QuotientReport classify_main_theorem(const Graph& g, const PermGroup& x, const Partition& p);

}  // namespace sgq
