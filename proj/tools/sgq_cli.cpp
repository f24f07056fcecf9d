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

// sgq: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 I/O or parse error, 3 contract violation, 4 bad selector.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgq/acceptance.hpp"
#include "sgq/arcs.hpp"
#include "sgq/coset.hpp"
#include "sgq/cycles.hpp"
#include "sgq/error.hpp"
#include "sgq/fixtures.hpp"
#include "sgq/io.hpp"
#include "sgq/iso.hpp"
#include "sgq/quotient.hpp"
#include "sgq/report.hpp"
#include "sgq/stars.hpp"
#include "sgq/symmetry.hpp"

namespace {

using namespace sgq;

enum Exit { kOk = 0, kVerify = 1, kIo = 2, kContract = 3, kSelector = 4 };

struct Inputs {
  std::string graph, group, partition, cycles, out = ".", name;
  std::string orbit, star, partner;
  int s_cap = 4;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::pair<Graph, PermGroup> load_pair(const Inputs& in) {
  Graph g = read_graph(in.graph);
  PermGroup x = read_group(in.group);
  if (x.degree() != g.order())
    throw ContractError("group degree " + std::to_string(x.degree()) + " differs from graph order " +
                        std::to_string(g.order()));
  return {g, x};
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw SelectorError("bad number '" + tok + "' in selector");
    out.push_back(std::stoul(tok));
  }
  return out;
}

// Index into the canonical orbit list, or an explicit 3-arc "a,b,c,d".
ThreeArcOrbit select_orbit(const Graph& g, const PermGroup& x, const std::string& sel) {
  auto orbits = three_arc_orbits(g, x);
  if (orbits.empty()) throw ContractError("no 3-arcs");
  if (sel.find(',') == std::string::npos) {
    auto v = parse_list(sel.empty() ? "0" : sel);
    if (v[0] >= orbits.size())
      throw SelectorError("orbit index " + sel + " out of range, " + std::to_string(orbits.size()) + " orbits");
    return orbits[v[0]];
  }
  Object arc;
  for (auto v : parse_list(sel)) arc.push_back(static_cast<Point>(v));
  for (const auto& o : orbits)
    if (o.contains(arc)) return o;
  throw SelectorError("'" + sel + "' is not a 3-arc of the graph");
}

// "c;a,b,c"
Star parse_star(const Graph& g, const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos) throw SelectorError("star must be written 'centre;leaf,leaf,...'");
  auto c = parse_list(s.substr(0, semi));
  auto l = parse_list(s.substr(semi + 1));
  if (c.size() != 1) throw SelectorError("star needs one centre");
  std::vector<Vertex> leaves(l.begin(), l.end());
  try {
    return make_star(g, static_cast<Vertex>(c[0]), leaves);
  } catch (const DomainError& e) {
    throw SelectorError(e.what());
  }
}

DoubleStarOrbit select_theta(const Graph& g, const PermGroup& x, const Inputs& in) {
  if (in.star.empty()) throw SelectorError("pi needs --star");
  Star l = parse_star(g, in.star);
  if (!in.partner.empty()) {
    Star r = parse_star(g, in.partner);
    try {
      return double_star_orbit(g, x, l, r);
    } catch (const ContractError& e) {
      throw SelectorError(e.what());
    }
  }
  StarOrbit so = star_orbit(g, x, l);
  if (!in.orbit.empty()) {
    auto all = double_star_orbits(g, x, so);
    auto v = parse_list(in.orbit);
    if (v.size() != 1 || v[0] >= all.size())
      throw SelectorError("double-star orbit index out of range, " + std::to_string(all.size()) + " orbits");
    return all[v[0]];
  }
  auto found = find_self_paired_double_star(g, x, so);
  if (!found.orbit) throw ContractError("no self-paired double-star orbit on this star orbit");
  return *found.orbit;
}

int cmd_analyze(const Inputs& in) {
  auto [g, x] = load_pair(in);
  emit(to_json(analyze_symmetry(g, x, in.s_cap)));
  return kOk;
}

int cmd_orbits(const Inputs& in, bool self_paired_only) {
  auto [g, x] = load_pair(in);
  auto orbits = three_arc_orbits(g, x);
  if (orbits.empty()) throw ContractError("no 3-arcs");
  Json rows = Json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (!self_paired_only || orbits[i].self_paired) rows.push_back(to_json(orbits[i], i));
  emit(Json{{"orbits", rows}});
  return kOk;
}

Construction build(const std::string& kind, const Graph& g, const PermGroup& x, const Inputs& in, Object& rep,
                   std::vector<std::size_t>& ell, bool& sp) {
  if (kind == "pi") {
    auto theta = select_theta(g, x, in);
    rep = theta.left.object();
    auto r = theta.right.object();
    rep.insert(rep.end(), r.begin(), r.end());
    sp = theta.self_paired;
    return pi_construct(g, x, theta);
  }
  auto o = select_orbit(g, x, in.orbit);
  rep = o.representative;
  ell = o.ell;
  sp = o.self_paired;
  if (kind == "gimel") return gimel_construct(g, x, o);
  if (kind == "xi") return xi_construct(g, x, o);
  if (kind == "psi") return psi_construct(g, x, jmap(g, o.members));
  throw SelectorError("unknown construction " + kind);
}

int cmd_construct(const std::string& kind, const Inputs& in) {
  auto [g, x] = load_pair(in);
  Object rep;
  std::vector<std::size_t> ell;
  bool sp = false;
  Construction c = build(kind, g, x, in, rep, ell, sp);
  const std::string base = (std::filesystem::path(in.out) / (in.name.empty() ? kind : in.name)).string();
  std::filesystem::create_directories(in.out);
  Json side = construction_sidecar(c, g, rep, ell, sp);
  if (kind == "pi") {
    // rep is the left star object followed by the right one
    const auto half = rep.begin() + static_cast<std::ptrdiff_t>(rep.size() / 2);
    side["orbit_representative"] = {{"left", Object(rep.begin(), half)}, {"right", Object(half, rep.end())}};
  }
  write_file_atomic(base + ".graph", format_graph(c.graph));
  write_file_atomic(base + ".part", format_partition(c.partition));
  if (c.group) write_file_atomic(base + ".grp", format_group(*c.group));
  write_file_atomic(base + ".json", side.dump(2) + "\n");
  emit(side);
  return kOk;
}

int cmd_classify(const Inputs& in) {
  auto [g, x] = load_pair(in);
  Partition p = read_partition(in.partition, g.order());
  emit(to_json(classify_main_theorem(g, x, p)));
  return kOk;
}

int cmd_verify_near(const Inputs& in) {
  Graph g = read_graph(in.graph);
  auto cycles = read_cycles(in.cycles);
  auto c = verify_near_ngonal(g, cycles);
  emit(to_json(c));
  return c.ok ? kOk : kVerify;
}

int cmd_verify_round_trip(const std::string& kind, const Inputs& in) {
  auto [g, x] = load_pair(in);
  Object rep;
  std::vector<std::size_t> ell;
  bool sp = false;
  Construction c = build(kind, g, x, in, rep, ell, sp);
  Graph q = quotient_graph(c.graph, c.partition);
  auto iso = find_isomorphism(q, g);
  Json j{{"construction", kind}, {"quotient_isomorphic_to_source", static_cast<bool>(iso)},
         {"certificate", iso.certificate}};
  bool ok = static_cast<bool>(iso);
  if (kind == "pi") {
    auto R = reconstruct_double_star(c.graph, *c.group, c.partition);
    j["reconstruction"] = {{"m_star", R.m_star}, {"verified", R.verified}, {"map", R.iso}};
    ok = ok && R.verified;
  }
  j["passed"] = ok;
  emit(j);
  return ok ? kOk : kVerify;
}

int cmd_verify_suite(int only, bool verbose, bool json) {
  Json all = Json::array();
  bool ok = true;
  for (int id = 1; id <= kCriteria; ++id) {
    if (only && id != only) continue;
    auto r = run_criterion(id);
    ok = ok && r.passed;
    if (json) {
      all.push_back(to_json(r));
      continue;
    }
    std::printf("criterion %d %-40s %s\n", r.id, r.title.c_str(), r.passed ? "PASS" : "FAIL");
    for (const auto& c : r.checks)
      if (verbose || c.rfind("FAIL", 0) == 0) std::printf("    %s\n", c.c_str());
  }
  if (json) emit(Json{{"criteria", all}, {"passed", ok}});
  return ok ? kOk : kVerify;
}

int cmd_coset(const Inputs& in, std::size_t p, const std::string& shape, int hit, const std::string& g_sel) {
  PermGroup x = in.group.empty() ? psl2(p) : read_group(in.group);
  auto hits = search_coset_data(x, shape);
  Json j;
  j["group_order"] = x.order();
  j["shape"] = shape;
  j["hits"] = hits.size();
  std::size_t gen = 0;
  for (const auto& d : hits) gen += d.generates;
  j["generating_hits"] = gen;
  if (hits.empty()) {
    j["graph"] = nullptr;
    emit(j);
    return kOk;
  }
  std::size_t pick = 0;
  if (hit >= 0) {
    if (static_cast<std::size_t>(hit) >= hits.size()) throw SelectorError("hit index out of range");
    pick = static_cast<std::size_t>(hit);
  } else {
    for (std::size_t i = 0; i < hits.size(); ++i)
      if (hits[i].generates) {
        pick = i;
        break;
      }
  }
  const auto& d = hits[pick];
  auto cg = coset_graph(x, d.h, d.z);
  const Graph& g = cg.graph;
  const bool regular2 = is_s_arc_transitive(g, cg.action, 2) && cg.action.order() == s_arcs(g, 2).size();
  j["hit"] = pick;
  j["z"] = d.z.to_string();
  j["graph"] = {{"vertices", g.order()},
                {"valency", g.valency() ? Json(*g.valency()) : Json(nullptr)},
                {"connected", is_connected(g)},
                {"components", components(g).size()},
                {"arc2_regular", regular2}};
  j["warnings"] = cg.warnings;
  // the 3-arc (Hzg, H, Hz, Hzgz) for the chosen g in H outside P
  std::vector<Permutation> choices;
  for (const auto& e : d.h_elements)
    if (!d.p.contains(e)) choices.push_back(e);
  std::size_t gi = g_sel.empty() ? 0 : parse_list(g_sel).at(0);
  if (gi >= choices.size()) throw SelectorError("g index out of range");
  auto arc = coset_three_arc(cg, d, choices[gi]);
  auto orb = three_arc_orbit_of(g, cg.action, arc);
  j["three_arc"] = {{"g", choices[gi].to_string()}, {"arc", arc}, {"ell", orb.ell}, {"self_paired", orb.self_paired}};
  if (in.out != ".") {
    std::filesystem::create_directories(in.out);
    const std::string base = (std::filesystem::path(in.out) / (in.name.empty() ? "coset" : in.name)).string();
    write_file_atomic(base + ".graph", format_graph(g));
    write_file_atomic(base + ".grp", format_group(cg.action));
  }
  emit(j);
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  Graph ga = read_graph(a), gb = read_graph(b);
  auto r = find_isomorphism(ga, gb);
  emit(Json{{"isomorphic", static_cast<bool>(r)},
            {"certificate", r.certificate},
            {"map", r.map ? Json(*r.map) : Json(nullptr)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric graph quotients and constructions"};
  app.require_subcommand(1);
  std::string max_order;
  app.add_option("--max-order", max_order, "group order bound for enumeration (overrides SGQ_MAX_ORDER)");
  Inputs in;
  auto pair_opts = [&](CLI::App* c) {
    c->add_option("--graph", in.graph, ".graph file")->required();
    c->add_option("--group", in.group, ".grp file")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "symmetry report");
  pair_opts(analyze);
  analyze->add_option("--s-cap", in.s_cap, "largest s examined")->check(CLI::PositiveNumber);

  bool sp_only = false;
  auto* orbits = app.add_subcommand("orbits", "orbits on 3-arcs");
  pair_opts(orbits);
  orbits->add_flag("--self-paired-only", sp_only);

  std::string kind;
  auto* construct = app.add_subcommand("construct", "build gimel, psi, xi or pi");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember({"gimel", "psi", "xi", "pi"}));
  pair_opts(construct);
  construct->add_option("--orbit", in.orbit, "orbit index or 3-arc a,b,c,d");
  construct->add_option("--star", in.star, "pi: left star 'c;a,b,...'");
  construct->add_option("--partner", in.partner, "pi: right star 'c;a,b,...'");
  construct->add_option("--out", in.out, "output directory");
  construct->add_option("--name", in.name, "output file stem");

  auto* classify = app.add_subcommand("classify", "quotient report and case");
  pair_opts(classify);
  classify->add_option("--partition", in.partition, ".part file")->required();

  auto* verify = app.add_subcommand("verify", "checks");
  verify->require_subcommand(1);
  auto* near = verify->add_subcommand("near-ngonal", "near polygon certificate");
  near->add_option("--graph", in.graph)->required();
  near->add_option("--cycles", in.cycles)->required();
  std::string rt_kind;
  auto* rt = verify->add_subcommand("round-trip", "quotient of a construction against its source");
  rt->add_option("--construction", rt_kind)->required()->check(CLI::IsMember({"gimel", "psi", "xi", "pi"}));
  pair_opts(rt);
  rt->add_option("--orbit", in.orbit);
  rt->add_option("--star", in.star);
  rt->add_option("--partner", in.partner);
  int only = 0;
  bool verbose = false, json = false;
  auto* suite = verify->add_subcommand("suite", "acceptance battery");
  suite->add_option("--criterion", only)->check(CLI::Range(1, kCriteria));
  suite->add_flag("-v,--verbose", verbose);
  suite->add_flag("--json", json);

  std::size_t p = 11;
  std::string shape = "A4", g_sel;
  int hit = -1;
  auto* coset = app.add_subcommand("coset", "coset graph search");
  coset->add_option("--psl2", p, "use PSL(2,p) on the projective line");
  coset->add_option("--group", in.group, ".grp file instead of PSL(2,p)");
  coset->add_option("--shape", shape)->check(CLI::IsMember({"A4", "S4"}));
  coset->add_option("--hit", hit, "index into the hit list (default: first with <H,z> = X)");
  coset->add_option("--g", g_sel, "index of g among H outside P for the 3-arc");
  coset->add_option("--out", in.out);
  coset->add_option("--name", in.name);

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "graph isomorphism");
  iso->add_option("--graph", iso_a)->required();
  iso->add_option("--other", iso_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kIo;
  }
  if (!max_order.empty()) setenv("SGQ_MAX_ORDER", max_order.c_str(), 1);

  try {
    if (*analyze) return cmd_analyze(in);
    if (*orbits) return cmd_orbits(in, sp_only);
    if (*construct) return cmd_construct(kind, in);
    if (*classify) return cmd_classify(in);
    if (*near) return cmd_verify_near(in);
    if (*rt) return cmd_verify_round_trip(rt_kind, in);
    if (*suite) return cmd_verify_suite(only, verbose, json);
    if (*coset) return cmd_coset(in, p, shape, hit, g_sel);
    if (*iso) return cmd_iso(iso_a, iso_b);
  } catch (const SelectorError& e) {
    std::cerr << "sgq: selector: " << e.what() << "\n";
    return kSelector;
  } catch (const ParseError& e) {
    std::cerr << "sgq: parse error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "sgq: " << e.what() << "\n";
    return kIo;
  } catch (const ContractError& e) {
    std::cerr << "sgq: " << e.what() << "\n";
    return kContract;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "sgq: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
