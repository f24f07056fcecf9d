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

#include "sgq/stars.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgq/error.hpp"
#include "sgq/iso.hpp"
#include "sgq/symmetry.hpp"

namespace sgq {

namespace {

Object pair_object(const Star& l, const Star& r) {
  Object o = l.object();
  Object b = r.object();
  o.insert(o.end(), b.begin(), b.end());
  return o;
}

std::pair<Star, Star> split_pair(const Object& o) {
  const std::size_t half = o.size() / 2;
  return {Star::from_object(Object(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(half))),
          Star::from_object(Object(o.begin() + static_cast<std::ptrdiff_t>(half), o.end()))};
}

void check_double(const Star& l, const Star& r) {
  if (l.leaves.size() != r.leaves.size()) throw ContractError("double star sides differ in size");
  if (!std::binary_search(l.leaves.begin(), l.leaves.end(), r.center) ||
      !std::binary_search(r.leaves.begin(), r.leaves.end(), l.center))
    throw ContractError("stars do not form a double star");
}

}  // namespace

Object Star::object() const {
  Object o{center};
  o.insert(o.end(), leaves.begin(), leaves.end());
  return o;
}

Star Star::from_object(const Object& o) {
  Star s;
  s.center = o.at(0);
  s.leaves.assign(o.begin() + 1, o.end());
  std::sort(s.leaves.begin(), s.leaves.end());
  return s;
}

Star make_star(const Graph& g, Vertex center, std::vector<Vertex> leaves) {
  if (center >= g.order()) throw DomainError("star centre out of range");
  std::sort(leaves.begin(), leaves.end());
  if (leaves.empty() || std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end())
    throw DomainError("star leaves must be a nonempty set");
  for (Vertex v : leaves)
    if (!g.adjacent(center, v)) throw DomainError("star leaf is not adjacent to the centre");
  return Star{center, std::move(leaves)};
}

StarOrbit star_orbit(const Graph& g, const PermGroup& x, const Star& s0) {
  if (x.degree() != g.order()) throw ContractError("group degree differs from graph order");
  Star s = make_star(g, s0.center, s0.leaves);
  auto dom = ActionDomain::open(DomainKind::stars, Shape::star(s.leaves.size()));
  auto orb = orbit(x, dom, s.object(), false);
  StarOrbit out;
  for (const auto& o : orb.sorted()) out.members.push_back(Star::from_object(o));
  out.representative = out.members.front();
  PermGroup st = stabilizer(x, dom, out.representative.object());
  auto leaf_orbit = st.orbit_of(out.representative.leaves.front());
  out.symmetric = std::includes(leaf_orbit.begin(), leaf_orbit.end(), out.representative.leaves.begin(),
                                out.representative.leaves.end());
  return out;
}

BlockDesign star_design(const Graph& g, const StarOrbit& s, Vertex tau) {
  if (!s.symmetric) throw ContractError("star orbit is not symmetric");
  BlockDesign d;
  d.points = g.neighbors(tau);
  for (const auto& st : s.members) {
    if (st.center != tau) continue;
    std::vector<std::size_t> pos;
    for (Vertex v : st.leaves)
      pos.push_back(static_cast<std::size_t>(std::lower_bound(d.points.begin(), d.points.end(), v) - d.points.begin()));
    d.blocks.push_back(std::move(pos));
    d.block_labels.push_back(st.object());
  }
  return d;
}

DoubleStarOrbit double_star_orbit(const Graph& g, const PermGroup& x, const Star& left, const Star& right) {
  if (x.degree() != g.order()) throw ContractError("group degree differs from graph order");
  Star l = make_star(g, left.center, left.leaves);
  Star r = make_star(g, right.center, right.leaves);
  check_double(l, r);
  auto dom = ActionDomain::open(DomainKind::double_stars, Shape::double_star(l.leaves.size()));
  auto orb = orbit(x, dom, pair_object(l, r), false);
  DoubleStarOrbit out;
  std::set<Star> stars;
  for (const auto& o : orb.sorted()) {
    auto pr = split_pair(o);
    stars.insert(pr.first);
    stars.insert(pr.second);
    out.members.push_back(pr);
  }
  out.left = out.members.front().first;
  out.right = out.members.front().second;
  out.self_paired = orb.contains(pair_object(out.right, out.left));
  out.stars.assign(stars.begin(), stars.end());
  return out;
}

std::vector<DoubleStarOrbit> double_star_orbits(const Graph& g, const PermGroup& x, const StarOrbit& s) {
  const Star& l = s.representative;
  std::vector<DoubleStarOrbit> out;
  std::set<std::pair<Star, Star>> covered;
  for (const auto& r : s.members) {
    if (!std::binary_search(l.leaves.begin(), l.leaves.end(), r.center)) continue;
    if (!std::binary_search(r.leaves.begin(), r.leaves.end(), l.center)) continue;
    if (covered.count({l, r})) continue;
    auto o = double_star_orbit(g, x, l, r);
    for (const auto& m : o.members) covered.insert(m);
    out.push_back(std::move(o));
  }
  return out;
}

DoubleStarSearch find_self_paired_double_star(const Graph& g, const PermGroup& x, const StarOrbit& s) {
  if (!s.symmetric) throw ContractError("star orbit is not symmetric");
  DoubleStarSearch out;
  const Vertex tau = s.representative.center;
  BlockDesign d = star_design(g, s, tau);
  auto r = d.r();
  const std::size_t m = d.multiplicity();
  if (r && m && (*r / m) % 2 == 1) {
    const Vertex sigma = g.neighbors(tau).front();
    if (auto y = least_element_mapping(x, {tau, sigma}, {sigma, tau})) {
      std::vector<Star> through;
      for (const auto& st : s.members)
        if (st.center == tau && std::binary_search(st.leaves.begin(), st.leaves.end(), sigma)) through.push_back(st);
      Permutation y2 = *y * *y;
      auto image = [&](const Star& st) {
        std::vector<Vertex> lv;
        for (Vertex v : st.leaves) lv.push_back(y2(v));
        std::sort(lv.begin(), lv.end());
        return Star{y2(st.center), lv};
      };
      std::set<Star> left(through.begin(), through.end());
      while (!left.empty()) {
        Star first = *left.begin();
        std::size_t len = 0;
        Star cur = first;
        do {
          left.erase(cur);
          cur = image(cur);
          ++len;
        } while (!(cur == first));
        if (len % 2 == 0) continue;
        Permutation z = y->pow(static_cast<long long>(len));
        std::vector<Vertex> rl;
        for (Vertex v : first.leaves) rl.push_back(z(v));
        std::sort(rl.begin(), rl.end());
        Star right{z(first.center), rl};
        auto theta = double_star_orbit(g, x, first, right);
        if (theta.self_paired) {
          out.orbit = std::move(theta);
          out.method = "constructive";
          return out;
        }
        break;
      }
    }
  }
  out.method = "scan";
  for (auto& o : double_star_orbits(g, x, s))
    if (o.self_paired) {
      out.orbit = std::move(o);
      break;
    }
  return out;
}

Construction pi_construct(const Graph& sigma, const PermGroup& x, const DoubleStarOrbit& theta) {
  if (x.degree() != sigma.order()) throw ContractError("group degree differs from graph order");
  if (!theta.self_paired) throw ContractError("double-star orbit is not self-paired");
  auto val = sigma.valency();
  const std::size_t k = theta.left.leaves.size();
  if (!val || k < 1 || k + 1 > *val) throw ContractError("star size must lie in [1, valency-1]");
  Construction c;
  c.kind = "pi";
  for (const auto& s : theta.stars) c.labels.push_back(s.object());
  std::map<Star, Vertex> idx;
  for (std::size_t i = 0; i < theta.stars.size(); ++i) idx[theta.stars[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (const auto& [l, r] : theta.members) es.emplace_back(idx.at(l), idx.at(r));
  c.graph = Graph::from_edge_set(c.labels.size(), es);
  std::map<Vertex, std::vector<Vertex>> by_center;
  for (std::size_t i = 0; i < theta.stars.size(); ++i) by_center[theta.stars[i].center].push_back(static_cast<Vertex>(i));
  std::vector<std::vector<Vertex>> blocks;
  for (auto& [cen, b] : by_center) blocks.push_back(std::move(b));
  c.partition = Partition(c.labels.size(), std::move(blocks));
  c.group = induced_group(x, ActionDomain(DomainKind::stars, Shape::star(k), c.labels));
  return c;
}

Reconstruction reconstruct_double_star(const Graph& g, const PermGroup& x, const Partition& p) {
  auto chk = validate_partition(g, x, p.blocks());
  if (!chk.ok()) throw ContractError("partition rejected: " + chk.detail);
  if (!is_s_arc_transitive(g, x, 1)) throw ContractError("graph is not arc-transitive under the group");
  LocalParams lp = local_parameters(g, p);
  if (lp.multicover) throw ContractError("graph is a multicover of its quotient");
  if (lp.b < 2) throw ContractError("quotient valency is below 2");
  Reconstruction R;
  R.quotient = quotient_graph(g, p);
  R.quotient_group = block_action(x, p);
  auto star_at = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (auto c : neighbour_blocks(g, p, v)) nb.push_back(static_cast<Vertex>(c));
    return Star{static_cast<Vertex>(p.block_of(v)), nb};
  };
  std::set<std::pair<Star, Star>> theta;
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) theta.insert({star_at(v), star_at(u)});
  const auto& first = *theta.begin();
  R.theta = double_star_orbit(R.quotient, R.quotient_group, first.first, first.second);
  if (R.theta.members.size() != theta.size() ||
      !std::equal(R.theta.members.begin(), R.theta.members.end(), theta.begin()))
    throw ContractError("double stars of the graph do not form one orbit");
  R.pi = pi_construct(R.quotient, R.quotient_group, R.theta);
  auto dm = dual_multiplicity(g, p);
  R.m_star = dm.m_star;
  R.refinement = dm.refinement;
  R.refined_quotient = quotient_graph(g, R.refinement);
  std::map<Object, Vertex> idx;
  for (std::size_t i = 0; i < R.pi.labels.size(); ++i) idx[R.pi.labels[i]] = static_cast<Vertex>(i);
  for (const auto& blk : R.refinement.blocks()) R.iso.push_back(idx.at(star_at(blk.front()).object()));
  R.verified = is_isomorphism(R.refined_quotient, R.pi.graph, R.iso);
  return R;
}

}  // namespace sgq
