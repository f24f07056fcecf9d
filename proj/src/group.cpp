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

#include "sgq/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sgq/error.hpp"

namespace sgq {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw SizeError("group order exceeds 64 bits");
  return r;
}

StabChain::StabChain(std::size_t degree, const std::vector<Point>& base_prefix)
    : degree_(degree), levels_(degree) {
  std::vector<bool> used(degree, false);
  for (Point p : base_prefix) {
    if (p >= degree) throw DomainError("base point " + std::to_string(p) + " out of range");
    if (!used[p]) {
      used[p] = true;
      base_.push_back(p);
    }
  }
  for (Point p = 0; p < degree; ++p)
    if (!used[p]) base_.push_back(p);
}

StabChain::Level& StabChain::touch(std::size_t level) {
  Level& L = levels_[level];
  if (L.reps.empty()) {
    L.slot[base_[level]] = 0;
    L.reps.push_back(Permutation::identity(degree_));
    L.inv_reps.push_back(Permutation::identity(degree_));
    L.orbit.push_back(base_[level]);
  }
  return L;
}

bool StabChain::sift(std::size_t level, Permutation& g) const {
  for (std::size_t k = level; k < degree_; ++k) {
    Point b = base_[k];
    Point j = g(b);
    if (j == b) continue;
    const Level& L = levels_[k];
    auto it = L.slot.find(j);
    if (it == L.slot.end()) return false;
    g = g * L.inv_reps[it->second];
  }
  return true;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  Permutation h = g;
  return sift(0, h);
}

bool StabChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw ContractError("generator degree mismatch");
  if (contains(g)) return false;
  add_at(0, g);
  return true;
}

// Knuth's A step: g lies in the stabilizer of base[0..level).
void StabChain::add_at(std::size_t level, const Permutation& g) {
  if (level >= degree_) return;
  Permutation h = g;
  if (sift(level, h)) return;
  touch(level);
  levels_[level].gens.push_back(g);
  std::vector<Point> snapshot = levels_[level].orbit;
  for (Point j : snapshot) {
    const Level& L = levels_[level];
    extend(level, L.reps[L.slot.at(j)] * g);
  }
}

// Knuth's B step, with the orbit closure driven by a queue of (rep, gen) pairs.
void StabChain::extend(std::size_t level, const Permutation& g) {
  std::deque<std::pair<std::size_t, std::size_t>> work;
  auto visit = [&](const Permutation& x) {
    Level& L = levels_[level];
    Point j = x(base_[level]);
    auto it = L.slot.find(j);
    if (it == L.slot.end()) {
      std::size_t s = L.reps.size();
      L.slot[j] = s;
      L.reps.push_back(x);
      L.inv_reps.push_back(x.inverse());
      L.orbit.push_back(j);
      for (std::size_t i = 0; i < L.gens.size(); ++i) work.emplace_back(s, i);
    } else {
      Permutation h = x * L.inv_reps[it->second];
      if (!h.is_identity()) add_at(level + 1, h);
    }
  };
  visit(g);
  while (!work.empty()) {
    auto [s, i] = work.front();
    work.pop_front();
    const Level& L = levels_[level];
    visit(L.reps[s] * L.gens[i]);
  }
}

std::uint64_t StabChain::order_from(std::size_t level) const {
  std::uint64_t n = 1;
  for (std::size_t k = level; k < degree_; ++k)
    if (!levels_[k].orbit.empty()) n = checked_mul(n, levels_[k].orbit.size());
  return n;
}

std::vector<Permutation> StabChain::generators_from(std::size_t level) const {
  std::vector<Permutation> out;
  for (std::size_t k = level; k < degree_; ++k)
    out.insert(out.end(), levels_[k].gens.begin(), levels_[k].gens.end());
  return out;
}

std::vector<Point> StabChain::basic_orbit(std::size_t level) const {
  if (levels_[level].orbit.empty()) return {base_[level]};
  return levels_[level].orbit;
}

void StabChain::for_each_element(const std::function<void(const Permutation&)>& fn) const {
  std::vector<std::size_t> nontrivial;
  for (std::size_t k = 0; k < degree_; ++k)
    if (levels_[k].reps.size() > 1) nontrivial.push_back(k);
  std::function<void(std::ptrdiff_t, const Permutation&)> rec = [&](std::ptrdiff_t idx,
                                                                   const Permutation& acc) {
    if (idx < 0) {
      fn(acc);
      return;
    }
    for (const auto& r : levels_[nontrivial[idx]].reps) rec(idx - 1, acc * r);
  };
  rec(static_cast<std::ptrdiff_t>(nontrivial.size()) - 1, Permutation::identity(degree_));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw ContractError("generator degree mismatch");
}

const StabChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    auto c = std::make_unique<StabChain>(degree_);
    for (const auto& g : gens_) c->add_generator(g);
    lazy_->chain = std::move(c);
  });
  return *lazy_->chain;
}

std::vector<Permutation> PermGroup::elements() const {
  if (order() > max_enumeration_order())
    throw SizeError("group of order " + std::to_string(order()) + " is too large to enumerate");
  std::vector<Permutation> out;
  out.reserve(order());
  chain().for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& points) const {
  StabChain c(degree_, points);
  for (const auto& g : gens_) c.add_generator(g);
  std::set<Point> distinct(points.begin(), points.end());
  return PermGroup(degree_, c.generators_from(distinct.size()));
}

std::vector<Point> PermGroup::orbit_of(Point p) const {
  if (p >= degree_) throw DomainError("point " + std::to_string(p) + " out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orbit{p};
  seen[p] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens_) {
      Point q = g(orbit[i]);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit_of(0).size() == degree_;
}

TransitivityInfo transitivity(const PermGroup& g) {
  if (g.degree() == 0) throw ContractError("transitivity of an empty domain");
  TransitivityInfo info;
  std::vector<Point> fixed;
  std::set<Point> remaining;
  for (Point p = 0; p < g.degree(); ++p) remaining.insert(p);
  PermGroup h = g;
  while (!remaining.empty()) {
    Point p = *remaining.begin();
    if (h.orbit_of(p).size() != remaining.size()) break;
    ++info.degree;
    fixed.push_back(p);
    remaining.erase(p);
    h = g.pointwise_stabilizer(fixed);
  }
  info.regular = g.pointwise_stabilizer(fixed).order() == 1;
  return info;
}

namespace {

bool single_cycle(const Permutation& p, std::size_t n) {
  auto cs = p.cycles();
  return cs.size() == 1 && cs[0].size() == n;
}

}  // namespace

GroupTag identify(const PermGroup& g) {
  GroupTag t;
  t.order = g.order();
  const std::size_t n = g.degree();
  t.transitivity = n ? transitivity(g).degree : 0;
  t.tag = "other(" + std::to_string(t.order) + "," + std::to_string(t.transitivity) + ")";
  const bool dihedral_candidate = n >= 3 && t.order == 2 * n && t.transitivity >= 1;
  const bool named_candidate = t.order == 12 || t.order == 24 || t.order == 168;
  if (!(dihedral_candidate || named_candidate) || t.order > max_enumeration_order()) return t;

  auto elems = g.elements();
  if (dihedral_candidate) {
    for (const auto& c : elems) {
      if (!single_cycle(c, n)) continue;
      std::set<Permutation> rot;
      for (std::size_t i = 0; i < n; ++i) rot.insert(c.pow(static_cast<long long>(i)));
      bool ok = true;
      for (const auto& x : elems)
        if (!rot.count(x) && x.order() != 2) ok = false;
      if (ok) {
        t.tag = "dihedral(" + std::to_string(n) + ")";
        return t;
      }
      break;
    }
  }
  std::map<std::uint64_t, std::uint64_t> stats;
  for (const auto& x : elems) ++stats[x.order()];
  using Stats = std::map<std::uint64_t, std::uint64_t>;
  if (stats == Stats{{1, 1}, {2, 3}, {3, 8}}) t.tag = "A4";
  else if (stats == Stats{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) t.tag = "S4";
  else if (stats == Stats{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}) t.tag = "PSL32";
  return t;
}

}  // namespace sgq
