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

#include "sgq/fixtures.hpp"

#include <algorithm>
#include <map>

#include "sgq/error.hpp"

namespace sgq {

namespace {

Permutation from_images(std::vector<Point> img) { return Permutation(std::move(img)); }

// Linear map on F_2^3 given by the images of the bits 1, 2, 4.
std::vector<Point> linear(Point e1, Point e2, Point e4) {
  std::vector<Point> img(8);
  for (Point v = 0; v < 8; ++v) img[v] = ((v & 1) ? e1 : 0) ^ ((v & 2) ? e2 : 0) ^ ((v & 4) ? e4 : 0);
  return img;
}

// A transvection and a Singer cycle (multiplication by x modulo x^3+x+1).
std::vector<std::vector<Point>> gl32_generators() { return {linear(1, 3, 4), linear(2, 4, 3)}; }

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup::trivial(n);
  std::vector<Point> c(n), t(n);
  for (Point i = 0; i < n; ++i) {
    c[i] = static_cast<Point>((i + 1) % n);
    t[i] = i;
  }
  std::swap(t[0], t[1]);
  return PermGroup(n, {from_images(c), from_images(t)});
}

PermGroup dihedral_group(std::size_t n) {
  std::vector<Point> c(n), f(n);
  for (Point i = 0; i < n; ++i) {
    c[i] = static_cast<Point>((i + 1) % n);
    f[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {from_images(c), from_images(f)});
}

Fixture complete_symmetric(std::size_t n) {
  return {"K" + std::to_string(n), complete_graph(n), symmetric_group(n), std::nullopt};
}

Fixture cycle_dihedral(std::size_t n) {
  return {"C" + std::to_string(n), cycle_graph(n), dihedral_group(n), std::nullopt};
}

Fixture k5_s5() { return complete_symmetric(5); }

Fixture k55_minus_matching() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = 0; j < 5; ++j)
      if (i != j) es.emplace_back(i, 5 + j);
  auto g = Graph::from_edges(10, es);
  std::vector<Point> c(10), t(10), z(10);
  for (Point i = 0; i < 10; ++i) {
    Point side = i / 5 * 5, j = i % 5;
    c[i] = side + (j + 1) % 5;
    t[i] = side + (j == 0 ? 1 : j == 1 ? 0 : j);
    z[i] = (i + 5) % 10;
  }
  return {"K55-5K2", g, PermGroup(10, {from_images(c), from_images(t), from_images(z)}), std::nullopt};
}

Object k55_delta1() { return {0, 6, 2, 5}; }
Object k55_delta2() { return {0, 6, 2, 8}; }

Fixture k8_agl32() {
  std::vector<Permutation> gens;
  for (Point s : {1u, 2u, 4u}) {
    std::vector<Point> img(8);
    for (Point v = 0; v < 8; ++v) img[v] = v ^ s;
    gens.push_back(from_images(img));
  }
  for (auto& img : gl32_generators()) gens.push_back(from_images(img));
  return {"K8", complete_graph(8), PermGroup(8, gens), std::nullopt};
}

Permutation k8_t(int i) {
  std::vector<Point> img(8);
  for (Point v = 0; v < 8; ++v) {
    Point a1 = v & 1, a2 = (v >> 1) & 1, a3 = (v >> 2) & 1;
    if (i == 1) img[v] = a1 | a2 << 1 | (a3 ^ 1) << 2;
    else if (i == 2) img[v] = a2 | a1 << 1 | (a3 ^ 1) << 2;
    else throw ContractError("k8_t takes 1 or 2");
  }
  return from_images(img);
}

Star k8_left() { return Star{0, {2, 4, 6}}; }

Star k8_right(int i) {
  Permutation t = k8_t(i);
  Star l = k8_left();
  std::vector<Vertex> lv;
  for (Vertex v : l.leaves) lv.push_back(t(v));
  std::sort(lv.begin(), lv.end());
  return Star{t(l.center), lv};
}

Fixture k77_psl32_wr() {
  auto g = complete_bipartite(7, 7);
  // Nonzero vector with label i sits at left i-1 and right i+6.
  std::vector<Permutation> gens;
  for (const auto& lin : gl32_generators()) {
    std::vector<Point> left(14), right(14);
    for (Point i = 0; i < 14; ++i) left[i] = right[i] = i;
    for (Point v = 1; v < 8; ++v) {
      left[v - 1] = lin[v] - 1;
      right[v + 6] = lin[v] + 6;
    }
    gens.push_back(from_images(left));
    gens.push_back(from_images(right));
  }
  std::vector<Point> sw(14);
  for (Point i = 0; i < 14; ++i) sw[i] = (i + 7) % 14;
  gens.push_back(from_images(sw));
  return {"K77", g, PermGroup(14, gens), std::nullopt};
}

Star k77_left() { return Star{0, {7, 8, 9}}; }
Star k77_right() { return Star{7, {0, 1, 2}}; }

Fixture chiral_k33() {
  auto g = complete_bipartite(3, 3);
  std::vector<Permutation> gens{from_images({1, 2, 0, 3, 4, 5}), from_images({0, 1, 2, 4, 5, 3}),
                                from_images({3, 4, 5, 0, 2, 1})};
  return {"K33-chiral", g, PermGroup(6, gens), std::nullopt};
}

Fixture k44_full() {
  auto g = complete_bipartite(4, 4);
  std::vector<Permutation> gens{from_images({1, 2, 3, 0, 4, 5, 6, 7}), from_images({1, 0, 2, 3, 4, 5, 6, 7}),
                                from_images({0, 1, 2, 3, 5, 6, 7, 4}), from_images({0, 1, 2, 3, 5, 4, 6, 7}),
                                from_images({4, 5, 6, 7, 0, 1, 2, 3})};
  return {"K44", g, PermGroup(8, gens), std::nullopt};
}

PermGroup psl2(std::size_t p) {
  if (p < 3) throw ContractError("psl2 needs an odd prime");
  const std::size_t n = p + 1;
  auto inv = [&](std::size_t a) {
    for (std::size_t b = 1; b < p; ++b)
      if (a * b % p == 1) return b;
    throw ContractError("p is not prime");
  };
  std::vector<Point> shift(n), neg_inv(n);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    neg_inv[x] = x == 0 ? static_cast<Point>(p) : static_cast<Point>((p - inv(x)) % p);
  }
  shift[p] = static_cast<Point>(p);
  neg_inv[p] = 0;
  return PermGroup(n, {from_images(shift), from_images(neg_inv)});
}

Fixture arc_lift(const Fixture& sigma, const std::string& pattern) {
  if (pattern != "3K2" && pattern != "K33-3K2" && pattern != "K33") throw ContractError("unknown pattern " + pattern);
  auto arcs = s_arcs(sigma.graph, 1);
  std::map<Object, Vertex> idx;
  for (std::size_t a = 0; a < arcs.size(); ++a) idx[arcs[a]] = static_cast<Vertex>(a);
  const std::size_t n = 3 * arcs.size();
  auto vert = [](std::size_t a, std::size_t i) { return static_cast<Vertex>(3 * a + i); };
  std::vector<Edge> es;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    std::size_t b = idx.at({arcs[a][1], arcs[a][0]});
    if (b < a) continue;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        bool e = pattern == "K33" || (pattern == "3K2" ? i == j : i != j);
        if (e) es.emplace_back(vert(a, i), vert(b, j));
      }
  }
  std::vector<Permutation> gens;
  for (const auto& g : sigma.group.generators()) {
    std::vector<Point> img(n);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      std::size_t b = idx.at({g(arcs[a][0]), g(arcs[a][1])});
      for (std::size_t i = 0; i < 3; ++i) img[vert(a, i)] = vert(b, i);
    }
    gens.push_back(from_images(img));
  }
  auto label_perm = [&](std::size_t only_arc, std::vector<Point> sigma3) {
    std::vector<Point> img(n);
    for (std::size_t a = 0; a < arcs.size(); ++a)
      for (std::size_t i = 0; i < 3; ++i)
        img[vert(a, i)] = (only_arc == arcs.size() || a == only_arc) ? vert(a, sigma3[i]) : vert(a, i);
    return from_images(img);
  };
  if (pattern == "K33") {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      gens.push_back(label_perm(a, {1, 2, 0}));
      gens.push_back(label_perm(a, {1, 0, 2}));
    }
  } else {
    gens.push_back(label_perm(arcs.size(), {1, 2, 0}));
    gens.push_back(label_perm(arcs.size(), {1, 0, 2}));
  }
  std::vector<std::vector<Vertex>> blocks(sigma.graph.order());
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t i = 0; i < 3; ++i) blocks[arcs[a][0]].push_back(vert(a, i));
  return {sigma.name + "-lift-" + pattern, Graph::from_edges(n, es), PermGroup(n, gens),
          Partition(n, std::move(blocks))};
}

Fixture blow_up(const Fixture& base) {
  const std::size_t n = base.graph.order();
  std::vector<Edge> es;
  for (const auto& [u, v] : base.graph.edges())
    for (Vertex a = 0; a < 2; ++a)
      for (Vertex b = 0; b < 2; ++b) es.emplace_back(2 * u + a, 2 * v + b);
  std::vector<Permutation> gens;
  for (const auto& g : base.group.generators()) {
    std::vector<Point> img(2 * n);
    for (Point v = 0; v < n; ++v)
      for (Point a = 0; a < 2; ++a) img[2 * v + a] = 2 * g(v) + a;
    gens.push_back(from_images(img));
  }
  std::vector<Point> sw(2 * n);
  for (Point i = 0; i < 2 * n; ++i) sw[i] = i;
  std::swap(sw[0], sw[1]);
  gens.push_back(from_images(sw));
  Fixture f{base.name + "-blowup", Graph::from_edges(2 * n, es), PermGroup(2 * n, gens), std::nullopt};
  if (base.partition) {
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& b : base.partition->blocks()) {
      std::vector<Vertex> nb;
      for (Vertex v : b) {
        nb.push_back(2 * v);
        nb.push_back(2 * v + 1);
      }
      blocks.push_back(std::move(nb));
    }
    f.partition = Partition(2 * n, std::move(blocks));
  }
  return f;
}

}  // namespace sgq
