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

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgq/perm.hpp"

namespace sgq {

// Deterministic Schreier-Sims table. The base is the given prefix followed by
// the remaining points in increasing order, so every point is a base point and
// levels that only ever see the identity stay empty.
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Point>& base_prefix = {});

  // Returns false when g was already a member.
  bool add_generator(const Permutation& g);
  bool contains(const Permutation& g) const;

  std::size_t degree() const { return degree_; }
  const std::vector<Point>& base() const { return base_; }
  std::uint64_t order() const { return order_from(0); }
  std::uint64_t order_from(std::size_t level) const;
  // Generators of the pointwise stabilizer of base[0..level).
  std::vector<Permutation> generators_from(std::size_t level) const;
  std::vector<Point> basic_orbit(std::size_t level) const;

  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

 private:
  struct Level {
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::unordered_map<Point, std::size_t> slot;
    std::vector<Permutation> reps;
    std::vector<Permutation> inv_reps;
  };

  bool sift(std::size_t level, Permutation& g) const;
  void add_at(std::size_t level, const Permutation& g);
  void extend(std::size_t level, const Permutation& g);
  Level& touch(std::size_t level);

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const { return order() == 1; }

  // Every element; refuses groups above max_enumeration_order().
  std::vector<Permutation> elements() const;

  PermGroup pointwise_stabilizer(const std::vector<Point>& points) const;
  PermGroup point_stabilizer(Point p) const { return pointwise_stabilizer({p}); }
  std::vector<Point> orbit_of(Point p) const;  // sorted
  bool is_transitive() const;

 private:
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<StabChain> chain;
  };
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<Lazy> lazy_;
};

struct TransitivityInfo {
  int degree = 0;        // largest k with the group k-transitive
  bool regular = false;  // pointwise stabilizer of k points is trivial
};

// Transitivity on the group's own points; degree must be positive.
TransitivityInfo transitivity(const PermGroup& g);

struct GroupTag {
  std::uint64_t order = 0;
  int transitivity = 0;
  std::string tag;  // A4 | S4 | PSL32 | dihedral(n) | other(order,k)
};

// Identification from order, degree, transitivity and element-order counts,
// enough to separate the local actions met in this library.
GroupTag identify(const PermGroup& g);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace sgq
