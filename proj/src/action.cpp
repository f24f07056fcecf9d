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

#include "sgq/action.hpp"

#include <algorithm>

#include "sgq/error.hpp"

namespace sgq {

namespace {

void canonical_segment(SegmentKind kind, Object::iterator b, Object::iterator e) {
  switch (kind) {
    case SegmentKind::tuple:
      break;
    case SegmentKind::set:
      std::sort(b, e);
      break;
    case SegmentKind::path: {
      Object rev(std::make_reverse_iterator(e), std::make_reverse_iterator(b));
      if (std::lexicographical_compare(rev.begin(), rev.end(), b, e)) std::copy(rev.begin(), rev.end(), b);
      break;
    }
    case SegmentKind::cycle: {
      const std::size_t n = static_cast<std::size_t>(e - b);
      if (n == 0) break;
      Object seq(b, e), best(b, e), cand(n);
      for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < n; ++s) {
          for (std::size_t i = 0; i < n; ++i)
            cand[i] = dir == 0 ? seq[(s + i) % n] : seq[(s + n - i) % n];
          if (cand < best) best = cand;
        }
      }
      std::copy(best.begin(), best.end(), b);
      break;
    }
  }
}

}  // namespace

Object Shape::canonical(const Object& o) const {
  Object out = o;
  std::size_t pos = 0;
  for (const auto& seg : segments_) {
    std::size_t len = seg.length == 0 ? out.size() - pos : seg.length;
    if (pos + len > out.size()) throw DomainError("object shorter than its shape");
    canonical_segment(seg.kind, out.begin() + pos, out.begin() + pos + len);
    pos += len;
  }
  if (pos != out.size()) throw DomainError("object longer than its shape");
  return out;
}

Object Shape::apply(const Permutation& g, const Object& o) const {
  Object img(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i] >= g.degree()) throw DomainError("object point outside the permutation domain");
    img[i] = g(o[i]);
  }
  return canonical(img);
}

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::points: return "points";
    case DomainKind::arcs: return "arcs";
    case DomainKind::s_paths: return "s-paths";
    case DomainKind::k_subsets: return "k-subsets";
    case DomainKind::stars: return "stars";
    case DomainKind::double_stars: return "double-stars";
    case DomainKind::path_pairs: return "path-pairs";
    case DomainKind::blocks: return "blocks";
    case DomainKind::cycles: return "cycles";
    case DomainKind::flags: return "flags";
    case DomainKind::objects: return "objects";
  }
  return "objects";
}

ActionDomain::ActionDomain(DomainKind kind, Shape shape, std::vector<Object> elements)
    : kind_(kind), shape_(std::move(shape)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    elements_[i] = shape_.canonical(elements_[i]);
    if (!index_.emplace(elements_[i], i).second) throw DomainError("duplicate domain element");
  }
}

ActionDomain ActionDomain::open(DomainKind kind, Shape shape) {
  ActionDomain d(kind, std::move(shape), {});
  d.explicit_ = false;
  return d;
}

ActionDomain ActionDomain::points(std::size_t n) {
  std::vector<Object> els(n);
  for (std::size_t i = 0; i < n; ++i) els[i] = {static_cast<Point>(i)};
  return ActionDomain(DomainKind::points, Shape::tuple(1), std::move(els));
}

std::optional<std::size_t> ActionDomain::index_of(const Object& o) const {
  auto it = index_.find(shape_.canonical(o));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Permutation ActionDomain::induced(const Permutation& g) const {
  if (!explicit_) throw DomainError("induced action needs an explicit domain");
  std::vector<Point> img(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto it = index_.find(act(g, elements_[i]));
    if (it == index_.end()) throw DomainError("domain of " + to_string(kind_) + " is not closed under the group");
    img[i] = static_cast<Point>(it->second);
  }
  return Permutation(std::move(img));
}

Object Orbit::representative() const { return *std::min_element(members.begin(), members.end()); }

std::vector<Object> Orbit::sorted() const {
  auto s = members;
  std::sort(s.begin(), s.end());
  return s;
}

Orbit orbit(const PermGroup& g, const ActionDomain& d, const Object& seed0, bool with_transversal) {
  Object seed = d.shape().canonical(seed0);
  if (d.is_explicit() && !d.index_of(seed)) throw DomainError("seed is not in the " + to_string(d.kind()) + " domain");
  Orbit o;
  o.members.push_back(seed);
  o.where.emplace(seed, 0);
  if (with_transversal) o.transversal.push_back(Permutation::identity(g.degree()));
  for (std::size_t i = 0; i < o.members.size(); ++i) {
    for (const auto& s : g.generators()) {
      Object img = d.act(s, o.members[i]);
      if (o.where.count(img)) continue;
      if (d.is_explicit() && !d.index_of(img)) throw DomainError("domain of " + to_string(d.kind()) + " is not closed under the group");
      o.where.emplace(img, o.members.size());
      o.members.push_back(std::move(img));
      if (with_transversal) o.transversal.push_back(o.transversal[i] * s);
    }
  }
  return o;
}

std::vector<std::vector<std::size_t>> orbit_partition(const PermGroup& g, const ActionDomain& d) {
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(d.induced(s));
  std::vector<bool> seen(d.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orb{i};
    seen[i] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& s : gens) {
        Point j = s(static_cast<Point>(orb[k]));
        if (!seen[j]) {
          seen[j] = true;
          orb.push_back(j);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup stabilizer(const PermGroup& g, const ActionDomain& d, const Object& seed) {
  Orbit o = orbit(g, d, seed, true);
  const std::uint64_t target = g.order() / o.size();
  std::vector<Permutation> gens;
  if (target == 1) return PermGroup(g.degree(), {});
  StabChain c(g.degree());
  for (std::size_t i = 0; i < o.size() && c.order() < target; ++i) {
    for (const auto& s : g.generators()) {
      std::size_t j = o.where.at(d.act(s, o.members[i]));
      Permutation h = o.transversal[i] * s * o.transversal[j].inverse();
      if (h.is_identity()) continue;
      if (c.add_generator(h)) {
        gens.push_back(h);
        if (c.order() == target) break;
      }
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<Point>& set) {
  return stabilizer(g, ActionDomain::open(DomainKind::k_subsets, Shape::set()), set);
}

PermGroup tuple_stabilizer(const PermGroup& g, const std::vector<Point>& tuple) {
  return g.pointwise_stabilizer(tuple);
}

PermGroup induced_group(const PermGroup& g, const ActionDomain& d) {
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(d.induced(s));
  return PermGroup(d.size(), std::move(gens));
}

PermGroup kernel_of_action(const PermGroup& g, const ActionDomain& d) {
  if (!d.is_explicit()) throw DomainError("kernel needs an explicit domain");
  PermGroup k = g;
  for (const auto& e : d.elements()) {
    if (k.is_trivial()) break;
    if (orbit(k, d, e, false).size() > 1) k = stabilizer(k, d, e);
  }
  return k;
}

TransitivityInfo transitivity_on(const PermGroup& g, const ActionDomain& d) {
  if (d.size() == 0) throw ContractError("transitivity of an empty domain");
  return transitivity(induced_group(g, d));
}

}  // namespace sgq
