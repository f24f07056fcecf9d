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

#include "sgq/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgq/error.hpp"
#include "sgq/iso.hpp"
#include "sgq/symmetry.hpp"

namespace sgq {

Partition::Partition(std::size_t ground_size, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)), block_of_(ground_size, static_cast<std::size_t>(-1)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw ContractError("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (Vertex v : blocks_[i]) {
      if (v >= ground_size) throw ContractError("block vertex " + std::to_string(v) + " out of range");
      if (block_of_[v] != static_cast<std::size_t>(-1))
        throw ContractError("vertex " + std::to_string(v) + " lies in two blocks");
      block_of_[v] = i;
    }
  for (Vertex v = 0; v < ground_size; ++v)
    if (block_of_[v] == static_cast<std::size_t>(-1))
      throw ContractError("vertex " + std::to_string(v) + " is not covered");
}

PartitionCheck validate_partition(const Graph& g, const PermGroup& x,
                                  const std::vector<std::vector<Vertex>>& blocks) {
  PartitionCheck c;
  if (x.degree() != g.order()) throw ContractError("group degree differs from graph order");
  Partition p;
  try {
    p = Partition(g.order(), blocks);
  } catch (const ContractError& e) {
    c.status = PartitionStatus::not_covering;
    c.detail = e.what();
    return c;
  }
  if (p.size() <= 1 || p.size() == g.order()) {
    c.status = PartitionStatus::trivial;
    c.detail = "partition has " + std::to_string(p.size()) + " blocks";
    return c;
  }
  for (std::size_t i = 0; i < x.generators().size(); ++i) {
    const auto& s = x.generators()[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      std::vector<Vertex> img;
      for (Vertex v : p[j]) img.push_back(s(v));
      std::sort(img.begin(), img.end());
      if (img != p[p.block_of(img[0])]) {
        c.status = PartitionStatus::not_invariant;
        c.generator = i;
        c.block = j;
        c.detail = "generator " + std::to_string(i) + " does not map block " + std::to_string(j) + " onto a block";
        return c;
      }
    }
  }
  bool crossing = false;
  std::optional<std::size_t> inner;
  for (auto [u, v] : g.edges()) {
    if (p.block_of(u) != p.block_of(v)) crossing = true;
    else if (!inner) inner = p.block_of(u);
  }
  if (crossing && inner) {
    c.status = PartitionStatus::not_independent;
    c.block = inner;
    c.detail = "block " + std::to_string(*inner) + " contains an edge";
  }
  return c;
}

Graph quotient_graph(const Graph& g, const Partition& p) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    auto a = p.block_of(u), b = p.block_of(v);
    if (a != b) es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph::from_edge_set(p.size(), es);
}

ActionDomain block_domain(const Partition& p) {
  std::vector<Object> els(p.blocks().begin(), p.blocks().end());
  return ActionDomain(DomainKind::blocks, Shape::set(), std::move(els));
}

PermGroup block_action(const PermGroup& x, const Partition& p) { return induced_group(x, block_domain(p)); }

std::vector<std::size_t> neighbour_blocks(const Graph& g, const Partition& p, Vertex v) {
  std::set<std::size_t> s;
  for (Vertex w : g.neighbors(v))
    if (p.block_of(w) != p.block_of(v)) s.insert(p.block_of(w));
  return {s.begin(), s.end()};
}

std::vector<Vertex> trace(const Graph& g, const Partition& p, std::size_t b, std::size_t c) {
  std::vector<Vertex> out;
  for (Vertex v : p[b])
    for (Vertex w : g.neighbors(v))
      if (p.block_of(w) == c) {
        out.push_back(v);
        break;
      }
  return out;
}

LocalParams local_parameters(const Graph& g, const Partition& p) {
  LocalParams lp;
  lp.v = p[0].size();
  for (const auto& b : p.blocks())
    if (b.size() != lp.v) throw ContractError("blocks differ in size");
  Graph q = quotient_graph(g, p);
  auto b = q.valency();
  if (!b) throw ContractError("quotient is not regular");
  lp.b = *b;
  std::optional<std::size_t> k;
  std::set<std::string> patterns;
  for (Vertex bb = 0; bb < q.order(); ++bb)
    for (Vertex cc : q.neighbors(bb)) {
      auto t = trace(g, p, bb, cc);
      if (k && *k != t.size()) throw ContractError("trace size k is not constant");
      k = t.size();
      if (patterns.size() < 2) patterns.insert(bipartite_pattern(g, t, trace(g, p, cc, bb)));
    }
  lp.k = k.value_or(0);
  std::optional<std::size_t> r;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = neighbour_blocks(g, p, v).size();
    if (r && *r != nb) throw ContractError("number r of blocks met by a vertex is not constant");
    r = nb;
  }
  lp.r = r.value_or(0);
  lp.multicover = lp.k == lp.v;
  if (patterns.size() == 1) lp.pattern = *patterns.begin();
  else if (patterns.empty()) lp.pattern = "other(no edges)";
  else lp.pattern = "other(mixed)";

  // lambda over every 2-path [D, B, C] of the quotient
  std::optional<std::size_t> lambda;
  for (Vertex bb = 0; bb < q.order(); ++bb) {
    const auto& nb = q.neighbors(bb);
    std::vector<std::vector<Vertex>> tr;
    for (Vertex c : nb) tr.push_back(trace(g, p, bb, c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        std::vector<Vertex> both;
        std::set_intersection(tr[i].begin(), tr[i].end(), tr[j].begin(), tr[j].end(), std::back_inserter(both));
        if (lambda && *lambda != both.size()) lp.lambda_nonconstant = true;
        lambda = both.size();
      }
  }
  if (!lp.lambda_nonconstant) lp.lambda = lambda;
  return lp;
}

std::optional<std::size_t> BlockDesign::k() const {
  if (blocks.empty()) return std::nullopt;
  for (const auto& b : blocks)
    if (b.size() != blocks[0].size()) return std::nullopt;
  return blocks[0].size();
}

std::optional<std::size_t> BlockDesign::r() const {
  if (points.empty()) return std::nullopt;
  std::vector<std::size_t> rep(points.size(), 0);
  for (const auto& b : blocks)
    for (auto i : b) ++rep[i];
  for (auto x : rep)
    if (x != rep[0]) return std::nullopt;
  return rep[0];
}

std::size_t BlockDesign::multiplicity() const {
  std::map<std::vector<std::size_t>, std::size_t> count;
  std::size_t best = 0;
  for (const auto& b : blocks) best = std::max(best, ++count[b]);
  return best;
}

std::optional<std::size_t> BlockDesign::pair_count() const {
  std::optional<std::size_t> lam;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      std::size_t c = 0;
      for (const auto& b : blocks)
        if (std::binary_search(b.begin(), b.end(), i) && std::binary_search(b.begin(), b.end(), j)) ++c;
      if (lam && *lam != c) return std::nullopt;
      lam = c;
    }
  return lam;
}

BlockDesign BlockDesign::dual() const {
  BlockDesign d;
  for (std::size_t i = 0; i < blocks.size(); ++i) d.points.push_back(static_cast<Point>(i));
  d.blocks.assign(points.size(), {});
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto pt : blocks[i]) d.blocks[pt].push_back(i);
  for (auto p : points) d.block_labels.push_back({p});
  return d;
}

BlockDesign BlockDesign::reduced() const {
  BlockDesign d;
  d.points = points;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (seen.insert(blocks[i]).second) {
      d.blocks.push_back(blocks[i]);
      if (i < block_labels.size()) d.block_labels.push_back(block_labels[i]);
    }
  return d;
}

BlockDesign block_design(const Graph& g, const Partition& p, std::size_t block) {
  BlockDesign d;
  d.points = p[block];
  for (std::size_t c : [&] {
         std::set<std::size_t> s;
         for (Vertex v : p[block])
           for (auto nb : neighbour_blocks(g, p, v)) s.insert(nb);
         return s;
       }()) {
    std::vector<std::size_t> pos;
    for (Vertex v : trace(g, p, block, c))
      pos.push_back(static_cast<std::size_t>(std::lower_bound(d.points.begin(), d.points.end(), v) - d.points.begin()));
    d.blocks.push_back(std::move(pos));
    d.block_labels.push_back({static_cast<Point>(c)});
  }
  return d;
}

bool design_flag_transitive(const Graph& g, const PermGroup& x, const Partition& p, std::size_t block) {
  PermGroup xb = setwise_stabilizer(x, p[block]);
  std::vector<Object> flags;
  std::set<std::size_t> nbs;
  for (Vertex v : p[block])
    for (auto c : neighbour_blocks(g, p, v)) nbs.insert(c);
  for (auto c : nbs)
    for (Vertex v : trace(g, p, block, c)) {
      Object f{v};
      f.insert(f.end(), p[c].begin(), p[c].end());
      flags.push_back(std::move(f));
    }
  if (flags.empty()) return false;
  ActionDomain d(DomainKind::flags, Shape({{SegmentKind::tuple, 1}, {SegmentKind::set, 0}}), flags);
  return orbit(xb, d, flags[0], false).size() == flags.size();
}

std::optional<std::vector<std::size_t>> design_isomorphism(const BlockDesign& a, const BlockDesign& b) {
  if (a.v() != b.v() || a.b() != b.b()) return std::nullopt;
  auto incidence = [](const BlockDesign& d) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      for (auto pt : d.blocks[i]) es.emplace_back(static_cast<Vertex>(pt), static_cast<Vertex>(d.v() + i));
    return Graph::from_edges(d.v() + d.b(), es);
  };
  std::vector<std::uint32_t> col(a.v() + a.b(), 0);
  std::fill(col.begin() + static_cast<std::ptrdiff_t>(a.v()), col.end(), 1);
  auto r = find_isomorphism(incidence(a), col, incidence(b), col);
  if (!r) return std::nullopt;
  return std::vector<std::size_t>(r.map->begin(), r.map->begin() + static_cast<std::ptrdiff_t>(a.v()));
}

BlockDesign fano_plane() {
  BlockDesign d;
  for (Point i = 0; i < 7; ++i) d.points.push_back(i);
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<std::size_t> l{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(l.begin(), l.end());
    d.blocks.push_back(l);
    d.block_labels.push_back({static_cast<Point>(i)});
  }
  return d;
}

DualMultiplicity dual_multiplicity(const Graph& g, const Partition& p) {
  DualMultiplicity out;
  std::set<std::vector<Vertex>> parts;
  std::optional<std::size_t> m;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t b = p.block_of(v);
    std::vector<Vertex> s = p[b];
    for (auto c : neighbour_blocks(g, p, v)) {
      auto t = trace(g, p, b, c);
      if (t.size() == p[b].size()) throw ContractError("graph is a multicover of its quotient");
      std::vector<Vertex> keep;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(keep));
      s.swap(keep);
    }
    if (m && *m != s.size()) throw ContractError("dual multiplicity is not constant");
    m = s.size();
    parts.insert(s);
  }
  out.m_star = m.value_or(0);
  out.refinement = Partition(g.order(), {parts.begin(), parts.end()});
  return out;
}

namespace {

std::size_t pattern_valency(const std::string& pattern) {
  if (pattern == "3K2") return 1;
  if (pattern == "K33-3K2") return 2;
  if (pattern == "K33") return 3;
  return 0;
}

}  // namespace

QuotientReport classify_main_theorem(const Graph& g, const PermGroup& x, const Partition& p) {
  QuotientReport R;
  R.case_label = "not-applicable";
  auto chk = validate_partition(g, x, p.blocks());
  if (!chk.ok()) {
    R.diagnostics.push_back("invalid partition: " + chk.detail);
    return R;
  }
  if (!is_s_arc_transitive(g, x, 1)) R.diagnostics.push_back("graph is not arc-transitive under the group");
  try {
    R.params = local_parameters(g, p);
  } catch (const ContractError& e) {
    R.diagnostics.push_back(std::string("local parameters: ") + e.what());
    return R;
  }
  const LocalParams& lp = R.params;
  Graph q = quotient_graph(g, p);
  PermGroup xq = block_action(x, p);
  R.faithful_on_blocks = kernel_of_action(x, block_domain(p)).is_trivial();
  R.m = block_design(g, p, 0).multiplicity();
  if (!lp.multicover) {
    try {
      R.m_star = dual_multiplicity(g, p).m_star;
    } catch (const ContractError& e) {
      R.diagnostics.push_back(std::string("dual multiplicity: ") + e.what());
    }
  }
  PermGroup xb = setwise_stabilizer(x, p[0]);
  {
    std::vector<Object> pts;
    for (Vertex v : p[0]) pts.push_back({v});
    GroupTag t = identify(induced_group(xb, ActionDomain(DomainKind::points, Shape::tuple(1), pts)));
    R.local_order = t.order;
    R.local_tag = t.tag;
  }
  auto q2 = arc_domain(q, 2);
  R.quotient_2at = q2.size() > 0 && orbit_count(xq, q2) == 1;

  bool ok = true;
  if (!is_connected(q)) {
    R.diagnostics.push_back("quotient is disconnected");
    ok = false;
  }
  if (lp.b < 2) {
    R.diagnostics.push_back("quotient valency b=" + std::to_string(lp.b) + " is below 2");
    ok = false;
  }
  if (lp.k != 3) {
    R.diagnostics.push_back("k=" + std::to_string(lp.k) + " differs from 3");
    ok = false;
  }
  if (lp.multicover) {
    R.diagnostics.push_back("graph is a multicover of the quotient (k=v)");
    ok = false;
  }
  if (!R.quotient_2at) {
    R.diagnostics.push_back("quotient is not 2-arc-transitive: " + std::to_string(q2.size() ? orbit_count(xq, q2) : 0) +
                            " orbits on 2-arcs");
    ok = false;
  }
  if (!ok) return R;

  // Counting identities that every instance must satisfy.
  if (lp.v * lp.r != 3 * lp.b) R.diagnostics.push_back("identity vr=3b fails");
  if (!lp.lambda) {
    R.diagnostics.push_back("lambda is not constant");
  } else {
    const std::size_t lam = *lp.lambda;
    if (lam * (lp.b - 1) != 3 * (lp.r - 1)) R.diagnostics.push_back("identity lambda(b-1)=3(r-1) fails");
    if (lam > 2) R.diagnostics.push_back("lambda exceeds 2");
    if (lam >= 1 && lp.b > lp.v) R.diagnostics.push_back("Fisher bound b<=v fails");
  }

  const std::string& tag = R.local_tag;
  const bool a4s4 = tag == "A4" || tag == "S4";
  std::string c;
  if (lp.v == 4 && lp.b == 4 && lp.r == 3 && a4s4) c = "a";
  else if (lp.v == 6 && lp.b == 4 && lp.r == 2 && a4s4) c = "b";
  else if (lp.v == 7 && lp.b == 7 && lp.r == 3 && tag == "PSL32") c = "c";
  else if (lp.v == 3 * lp.b && lp.v >= 6 && lp.r == 1) {
    std::vector<Object> nbs;
    std::set<std::size_t> seen;
    for (Vertex v : p[0])
      for (auto cb : neighbour_blocks(g, p, v))
        if (seen.insert(cb).second) nbs.push_back(p[cb]);
    ActionDomain d(DomainKind::blocks, Shape::set(), nbs);
    if (transitivity_on(xb, d).degree >= 2) c = "d";
    else R.diagnostics.push_back("block stabilizer is not 2-transitive on the adjacent blocks");
  }
  if (c.empty()) {
    R.case_label = "unmatched";
    R.diagnostics.push_back("no case matches (v,b,r)=(" + std::to_string(lp.v) + "," + std::to_string(lp.b) + "," +
                            std::to_string(lp.r) + ") with local group " + tag);
    return R;
  }
  R.case_label = c;
  if (c != "d") {
    if (R.m != 1) R.diagnostics.push_back("design multiplicity m differs from 1");
    if (R.m_star && *R.m_star != 1) R.diagnostics.push_back("dual multiplicity differs from 1");
  }
  const std::size_t ell = pattern_valency(lp.pattern);
  if (ell == 0) {
    R.diagnostics.push_back("bipartite pattern " + lp.pattern + " is not one of 3K2, K33-3K2, K33");
    return R;
  }
  R.subcase = c + "." + std::to_string(ell);
  auto val = g.valency();
  if (!val || *val != lp.r * ell)
    R.diagnostics.push_back("graph valency does not equal r times the pattern valency");
  return R;
}

}  // namespace sgq
