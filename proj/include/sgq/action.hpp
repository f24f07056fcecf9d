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
#include <unordered_map>
#include <vector>

#include "sgq/group.hpp"
#include "sgq/perm.hpp"

namespace sgq {

// An object is a flat point list cut into segments; each segment is mapped
// pointwise and then brought to canonical form.
enum class SegmentKind {
  tuple,  // ordered
  set,    // sorted
  path,   // lex-smaller of the sequence and its reversal
  cycle   // lex-least rotation or reflection
};

struct Segment {
  SegmentKind kind;
  std::size_t length;  // 0 means "the rest of the object"
};

class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  static Shape tuple(std::size_t n) { return Shape({{SegmentKind::tuple, n}}); }
  static Shape set() { return Shape({{SegmentKind::set, 0}}); }
  static Shape path() { return Shape({{SegmentKind::path, 0}}); }
  static Shape cycle() { return Shape({{SegmentKind::cycle, 0}}); }
  // Centre followed by the sorted leaves.
  static Shape star(std::size_t k) { return Shape({{SegmentKind::tuple, 1}, {SegmentKind::set, k}}); }
  static Shape double_star(std::size_t k) {
    return Shape({{SegmentKind::tuple, 1}, {SegmentKind::set, k}, {SegmentKind::tuple, 1},
                  {SegmentKind::set, k}});
  }
  static Shape path_pair(std::size_t n) {
    return Shape({{SegmentKind::path, n}, {SegmentKind::path, n}});
  }

  Object canonical(const Object& o) const;
  Object apply(const Permutation& g, const Object& o) const;

 private:
  std::vector<Segment> segments_;
};

enum class DomainKind {
  points,
  arcs,
  s_paths,
  k_subsets,
  stars,
  double_stars,
  path_pairs,
  blocks,
  cycles,
  flags,
  objects
};

std::string to_string(DomainKind k);

// A set of objects acted on by permutations of the ground set. An explicit
// domain lists its elements (index = position); an open domain only fixes the
// shape and accepts any object.
class ActionDomain {
 public:
  ActionDomain(DomainKind kind, Shape shape, std::vector<Object> elements);
  static ActionDomain open(DomainKind kind, Shape shape);
  static ActionDomain points(std::size_t n);

  DomainKind kind() const { return kind_; }
  const Shape& shape() const { return shape_; }
  bool is_explicit() const { return explicit_; }
  std::size_t size() const { return elements_.size(); }
  const Object& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Object>& elements() const { return elements_; }

  std::optional<std::size_t> index_of(const Object& o) const;
  Object act(const Permutation& g, const Object& o) const { return shape_.apply(g, o); }
  // Permutation of element indices; throws DomainError if the image leaves the domain.
  Permutation induced(const Permutation& g) const;

 private:
  DomainKind kind_;
  Shape shape_;
  bool explicit_ = true;
  std::vector<Object> elements_;
  std::unordered_map<Object, std::size_t, ObjectHash> index_;
};

struct Orbit {
  std::vector<Object> members;           // discovery order, members[0] is the seed
  std::vector<Permutation> transversal;  // transversal[i] maps the seed to members[i]
  std::unordered_map<Object, std::size_t, ObjectHash> where;

  std::size_t size() const { return members.size(); }
  bool contains(const Object& o) const { return where.count(o) > 0; }
  const Permutation& element_to(const Object& o) const { return transversal.at(where.at(o)); }
  Object representative() const;  // lexicographically least member
  std::vector<Object> sorted() const;
};

Orbit orbit(const PermGroup& g, const ActionDomain& d, const Object& seed,
            bool with_transversal = true);

// Orbits of an explicit domain as sorted index lists, ordered by least index.
std::vector<std::vector<std::size_t>> orbit_partition(const PermGroup& g, const ActionDomain& d);

// Stabilizer of one object: Schreier generators along the orbit, added until
// the order reaches |G| / |orbit|.
PermGroup stabilizer(const PermGroup& g, const ActionDomain& d, const Object& seed);
PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<Point>& set);
PermGroup tuple_stabilizer(const PermGroup& g, const std::vector<Point>& tuple);

PermGroup induced_group(const PermGroup& g, const ActionDomain& d);
PermGroup kernel_of_action(const PermGroup& g, const ActionDomain& d);
TransitivityInfo transitivity_on(const PermGroup& g, const ActionDomain& d);

}  // namespace sgq
