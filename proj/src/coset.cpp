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

#include "sgq/coset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sgq/error.hpp"

namespace sgq {

namespace {

using ElementSet = std::vector<Permutation>;  // sorted

ElementSet sorted_elements(const PermGroup& g) {
  auto e = g.elements();
  std::sort(e.begin(), e.end());
  return e;
}

bool member(const ElementSet& s, const Permutation& p) { return std::binary_search(s.begin(), s.end(), p); }

ElementSet conjugate(const ElementSet& s, const Permutation& z) {
  const Permutation zi = z.inverse();
  ElementSet out;
  out.reserve(s.size());
  for (const auto& h : s) out.push_back(zi * h * z);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet meet(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::map<std::uint64_t, std::size_t> order_stats(const ElementSet& s) {
  std::map<std::uint64_t, std::size_t> st;
  for (const auto& e : s) ++st[e.order()];
  return st;
}

// Least element set among the conjugates of s.
ElementSet conjugacy_key(const ElementSet& s, const ElementSet& all) {
  ElementSet best = s;
  for (const auto& g : all) {
    auto c = conjugate(s, g);
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

CosetGraph coset_graph(const PermGroup& x, const PermGroup& h, const Permutation& z) {
  if (h.degree() != x.degree() || z.degree() != x.degree()) throw ContractError("degree mismatch");
  if (!x.contains(z)) throw ContractError("z is not in X");
  for (const auto& g : h.generators())
    if (!x.contains(g)) throw ContractError("H is not a subgroup of X");
  if (h.contains(z)) throw ContractError("z lies in H");
  CosetGraph cg;
  const ElementSet he = sorted_elements(h);
  const auto xe = x.elements();

  std::unordered_set<Permutation, PermutationHash> hzh;
  for (const auto& a : he)
    for (const auto& b : he) hzh.insert(a * z * b);
  if (!hzh.count(z.inverse())) throw ContractError("HzH is not symmetric, the coset graph would be directed");
  if (!(z * z).is_identity()) cg.warnings.push_back("z is not an involution");

  std::unordered_map<Permutation, Vertex, PermutationHash> where;
  std::map<Permutation, std::vector<Permutation>> cosets;  // least element -> members
  for (const auto& g : xe) {
    if (where.count(g)) continue;
    std::vector<Permutation> c;
    for (const auto& a : he) c.push_back(a * g);
    std::sort(c.begin(), c.end());
    cosets.emplace(c.front(), c);
    for (const auto& m : c) where.emplace(m, 0);
  }
  for (auto& [rep, members] : cosets) {
    const auto idx = static_cast<Vertex>(cg.reps.size());
    cg.reps.push_back(rep);
    for (const auto& m : members) where[m] = idx;
  }
  const std::size_t n = cg.reps.size();
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (const auto& d : hzh) {
      Vertex j = where.at(d * cg.reps[i]);
      if (i < j) es.emplace_back(i, j);
    }
  cg.graph = Graph::from_edge_set(n, es);
  std::vector<Permutation> gens;
  for (const auto& g : x.generators()) {
    std::vector<Point> img(n);
    for (Vertex i = 0; i < n; ++i) img[i] = where.at(cg.reps[i] * g);
    gens.emplace_back(std::move(img));
  }
  cg.action = PermGroup(n, std::move(gens));
  return cg;
}

std::vector<CosetData> search_coset_data(const PermGroup& x, const std::string& shape) {
  std::uint64_t order;
  std::uint64_t ab_order;
  std::map<std::uint64_t, std::size_t> stats;
  if (shape == "A4") {
    order = 12;
    ab_order = 3;
    stats = {{1, 1}, {2, 3}, {3, 8}};
  } else if (shape == "S4") {
    order = 24;
    ab_order = 4;
    stats = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  } else {
    throw ContractError("unknown subgroup shape " + shape);
  }
  if (x.order() > max_enumeration_order()) throw SizeError("group order exceeds the enumeration bound");
  std::vector<CosetData> out;
  if (x.order() % order != 0) return out;
  ElementSet all = sorted_elements(x);
  std::vector<Permutation> involutions, threes;
  for (const auto& g : all) {
    auto o = g.order();
    if (o == 2) involutions.push_back(g);
    if (o == 3) threes.push_back(g);
  }
  // One involution per conjugacy class suffices: every candidate H has a
  // conjugate containing one of them.
  std::vector<Permutation> inv_reps;
  std::set<Permutation> seen;
  for (const auto& a : involutions) {
    if (seen.count(a)) continue;
    inv_reps.push_back(a);
    for (const auto& g : all) seen.insert(g.inverse() * a * g);
  }

  std::set<ElementSet> keys;
  std::vector<ElementSet> subgroups;
  for (const auto& a : inv_reps)
    for (const auto& b : threes) {
      if ((a * b).order() != ab_order) continue;
      bool known = false;
      for (const auto& s : subgroups)
        if (member(s, a) && member(s, b)) known = true;
      if (known) continue;
      PermGroup h(x.degree(), {a, b});
      if (h.order() != order) continue;
      ElementSet he = sorted_elements(h);
      if (order_stats(he) != stats) continue;
      subgroups.push_back(he);
      auto key = conjugacy_key(he, all);
      if (!keys.insert(key).second) continue;

      for (const auto& z : involutions) {
        if (member(he, z)) continue;
        ElementSet p = meet(he, conjugate(he, z));
        bool ok = false;
        if (shape == "A4") {
          if (p.size() == 3) {
            const Permutation& hp = p[0].is_identity() ? p[1] : p[0];
            ok = conjugate(p, z) == p && z.inverse() * hp * z == hp.inverse();
          }
        } else if (p.size() == 6 && order_stats(p) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 3}, {3, 2}}) {
          std::size_t norm = 0;
          for (const auto& g : all)
            if (conjugate(p, g) == p) ++norm;
          bool central = true;
          for (const auto& e : p)
            if (e * z != z * e) central = false;
          ok = norm == 12 && central && !member(p, z);
        }
        if (!ok) continue;
        CosetData d;
        d.h = h;
        d.z = z;
        std::vector<Permutation> pg(p.begin(), p.end());
        d.p = PermGroup(x.degree(), pg);
        d.h_elements = he;
        auto hz = h.generators();
        hz.push_back(z);
        d.generates = PermGroup(x.degree(), hz).order() == x.order();
        out.push_back(std::move(d));
      }
    }
  return out;
}

Object coset_three_arc(const CosetGraph& cg, const CosetData& d, const Permutation& g) {
  if (!d.h.contains(g) || d.p.contains(g)) throw ContractError("g must lie in H outside P");
  auto idx = [&](const Permutation& y) {
    for (const auto& a : d.h_elements) {
      Permutation c = a * y;
      for (std::size_t i = 0; i < cg.reps.size(); ++i)
        if (cg.reps[i] == c) return static_cast<Vertex>(i);
    }
    throw DomainError("element outside the group");
  };
  const Permutation id = Permutation::identity(g.degree());
  return {idx(d.z * g), idx(id), idx(d.z), idx(d.z * g * d.z)};
}

}  // namespace sgq
