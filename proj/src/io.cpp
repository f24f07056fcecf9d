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

#include "sgq/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "sgq/error.hpp"

namespace sgq {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string s;
  std::size_t n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos || s[first] == '#') continue;
    out.push_back({n, s.substr(first)});
  }
  return out;
}

std::vector<std::uint64_t> numbers(const Line& l, const std::string& source) {
  std::vector<std::uint64_t> out;
  std::istringstream in(l.text);
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw ParseError(source, l.number, "expected a vertex number, got '" + tok + "'");
    out.push_back(std::stoull(tok));
  }
  return out;
}

std::size_t header(const std::vector<Line>& lines, const std::string& key, const std::string& source) {
  if (lines.empty()) throw ParseError(source, 1, "missing '" + key + " <n>' header");
  std::istringstream in(lines[0].text);
  std::string word, num, extra;
  in >> word >> num;
  if (word != key || num.empty() || num.find_first_not_of("0123456789") != std::string::npos || (in >> extra) ||
      num.size() > 9)
    throw ParseError(source, lines[0].number, "expected '" + key + " <n>'");
  return std::stoul(num);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw IoError("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename onto " + path);
  }
}

PermGroup parse_group(const std::string& text, const std::string& source) {
  auto lines = content_lines(text);
  const std::size_t n = header(lines, "degree", source);
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      gens.push_back(Permutation::from_cycles(lines[i].text, n));
    } catch (const ContractError& e) {
      throw ParseError(source, lines[i].number, e.what());
    }
  }
  return PermGroup(n, std::move(gens));
}

Graph parse_graph(const std::string& text, const std::string& source) {
  auto lines = content_lines(text);
  const std::size_t n = header(lines, "vertices", source);
  std::vector<Edge> es;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto v = numbers(lines[i], source);
    if (v.size() != 2) throw ParseError(source, lines[i].number, "expected 'u v'");
    if (v[0] >= n || v[1] >= n) throw ParseError(source, lines[i].number, "vertex out of range");
    if (v[0] == v[1]) throw ParseError(source, lines[i].number, "loop");
    Edge e{static_cast<Vertex>(std::min(v[0], v[1])), static_cast<Vertex>(std::max(v[0], v[1]))};
    if (!seen.insert(e).second) throw ParseError(source, lines[i].number, "duplicate edge");
    es.push_back(e);
  }
  return Graph::from_edges(n, es);
}

Partition parse_partition(const std::string& text, std::size_t ground_size, const std::string& source) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> owner(ground_size, 0);
  for (const auto& l : content_lines(text)) {
    std::vector<Vertex> b;
    for (auto v : numbers(l, source)) {
      if (v >= ground_size) throw ParseError(source, l.number, "vertex out of range");
      if (owner[v]++) throw ParseError(source, l.number, "vertex " + std::to_string(v) + " in two blocks");
      b.push_back(static_cast<Vertex>(v));
    }
    blocks.push_back(std::move(b));
  }
  for (std::size_t v = 0; v < ground_size; ++v)
    if (!owner[v]) throw ParseError(source, 0, "vertex " + std::to_string(v) + " in no block");
  return Partition(ground_size, std::move(blocks));
}

std::vector<Object> parse_cycles(const std::string& text, const std::string& source) {
  std::vector<Object> out;
  for (const auto& l : content_lines(text)) {
    Object c;
    for (auto v : numbers(l, source)) c.push_back(static_cast<Point>(v));
    if (c.size() < 3) throw ParseError(source, l.number, "a cycle needs at least 3 vertices");
    out.push_back(std::move(c));
  }
  return out;
}

PermGroup read_group(const std::string& path) { return parse_group(read_file(path), path); }
Graph read_graph(const std::string& path) { return parse_graph(read_file(path), path); }
Partition read_partition(const std::string& path, std::size_t ground_size) {
  return parse_partition(read_file(path), ground_size, path);
}
std::vector<Object> read_cycles(const std::string& path) { return parse_cycles(read_file(path), path); }

std::string format_group(const PermGroup& g) {
  std::string s = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) s += p.to_string() + "\n";
  return s;
}

std::string format_graph(const Graph& g) {
  std::string s = "vertices " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

namespace {
std::string joined(const std::vector<Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "\n";
}
}  // namespace

std::string format_partition(const Partition& p) {
  std::string s;
  for (const auto& b : p.blocks()) s += joined(b);
  return s;
}

std::string format_cycles(const std::vector<Object>& cycles) {
  std::string s;
  for (const auto& c : cycles) s += joined(c);
  return s;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : format_graph(g)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sgq
