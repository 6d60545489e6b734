// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bkernel/graph.hpp"

namespace bk {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseOptions {
  bool simple = false;  // reject loops and double edges
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, int line) {
  if (tok.empty()) throw ParseError(line, "empty integer");
  size_t i = (tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) throw ParseError(line, "bad integer '" + tok + "'");
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw ParseError(line, "bad integer '" + tok + "'");
  try {
    return std::stoll(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range '" + tok + "'");
  }
}

}  // namespace detail

// Grammar (one record per line, '#' starts a comment):
//   bkg 1
//   n <count>               ids 0..count-1
//   v <id>...               optional: explicit ids when not contiguous
//   b <id>...               boundary
//   x <id>...               optional modulator
//   class independent|forest|td <d>|vc
//   e <u> <v> <mult>
//   tdp <child> <parent>...  optional treedepth parent pointers
inline BoundariedGraph parse_bkg(const std::string& text,
                                 ParseOptions opts = {}) {
  BoundariedGraph g;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool seen_magic = false, seen_n = false, seen_v = false, seen_b = false;
  long long n = 0;
  std::set<std::pair<Vertex, Vertex>> seen_edges;

  auto vertex_arg = [&](const std::string& tok) -> Vertex {
    long long id = detail::parse_int(tok, line);
    if (id < 0 || id >= n) throw ParseError(line, "id out of range: " + tok);
    if (!g.graph.has_vertex(static_cast<Vertex>(id)))
      throw ParseError(line, "id not declared: " + tok);
    return static_cast<Vertex>(id);
  };

  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (!seen_magic) {
      if (kw != "bkg" || tok.size() != 2 || tok[1] != "1")
        throw ParseError(line, "expected 'bkg 1'");
      seen_magic = true;
      continue;
    }
    if (kw == "n") {
      if (seen_n) throw ParseError(line, "duplicate 'n' line");
      if (tok.size() != 2) throw ParseError(line, "'n' takes one argument");
      n = detail::parse_int(tok[1], line);
      if (n < 0 || n > (1 << 24)) throw ParseError(line, "bad vertex count");
      seen_n = true;
      for (Vertex v = 0; v < n; ++v) g.graph.add_vertex(v);
      continue;
    }
    if (!seen_n) throw ParseError(line, "'n' line must precede '" + kw + "'");
    if (kw == "v") {
      if (seen_v || seen_b || !seen_edges.empty() || g.modulator)
        throw ParseError(line, "'v' must directly follow 'n'");
      seen_v = true;
      g.graph = Graph();
      for (size_t i = 1; i < tok.size(); ++i) {
        long long id = detail::parse_int(tok[i], line);
        if (id < 0 || id >= n) throw ParseError(line, "id out of range: " + tok[i]);
        if (g.graph.has_vertex(static_cast<Vertex>(id)))
          throw ParseError(line, "duplicate id in 'v': " + tok[i]);
        g.graph.add_vertex(static_cast<Vertex>(id));
      }
    } else if (kw == "b") {
      if (seen_b) throw ParseError(line, "duplicate 'b' line");
      seen_b = true;
      for (size_t i = 1; i < tok.size(); ++i) g.boundary.insert(vertex_arg(tok[i]));
    } else if (kw == "x") {
      if (g.modulator) throw ParseError(line, "duplicate 'x' line");
      g.modulator.emplace();
      for (size_t i = 1; i < tok.size(); ++i) g.modulator->insert(vertex_arg(tok[i]));
    } else if (kw == "class") {
      if (tok.size() < 2) throw ParseError(line, "'class' needs a value");
      if (tok[1] == "independent" && tok.size() == 2) {
        g.target = TargetClass::independent();
      } else if (tok[1] == "forest" && tok.size() == 2) {
        g.target = TargetClass::forest();
      } else if (tok[1] == "vc" && tok.size() == 2) {
        g.target = TargetClass::vertex_cover();
      } else if (tok[1] == "td" && tok.size() == 3) {
        long long d = detail::parse_int(tok[2], line);
        if (d < 1 || d > 64) throw ParseError(line, "treedepth out of range");
        g.target = TargetClass::treedepth(static_cast<int>(d));
      } else {
        throw ParseError(line, "unknown class '" + raw + "'");
      }
    } else if (kw == "e") {
      if (tok.size() != 4) throw ParseError(line, "'e' takes three arguments");
      Vertex u = vertex_arg(tok[1]), v = vertex_arg(tok[2]);
      long long m = detail::parse_int(tok[3], line);
      if (m < 1 || m > 1000) throw ParseError(line, "bad multiplicity");
      if (opts.simple && (u == v || m != 1))
        throw ParseError(line, "loops and multi-edges are not allowed in simple mode");
      auto key = std::minmax(u, v);
      if (!seen_edges.insert(key).second)
        throw ParseError(line, "duplicate edge line");
      g.graph.set_multiplicity(u, v, static_cast<int>(m));
    } else if (kw == "tdp") {
      if (tok.size() % 2 != 1) throw ParseError(line, "'tdp' takes pairs");
      for (size_t i = 1; i + 1 < tok.size(); i += 2) {
        Vertex c = vertex_arg(tok[i]), p = vertex_arg(tok[i + 1]);
        if (g.td_parent.count(c)) throw ParseError(line, "duplicate tdp child");
        g.td_parent[c] = p;
      }
    } else {
      throw ParseError(line, "unknown record '" + kw + "'");
    }
  }
  if (!seen_magic) throw ParseError(line, "empty input");
  if (!seen_n) throw ParseError(line, "missing 'n' line");
  return g;
}

inline std::string write_bkg(const BoundariedGraph& g) {
  std::ostringstream out;
  const auto ids = g.graph.vertex_list();
  const Vertex n = ids.empty() ? 0 : ids.back() + 1;
  out << "bkg 1\n";
  out << "n " << n << "\n";
  if (static_cast<Vertex>(ids.size()) != n) {
    out << "v";
    for (Vertex v : ids) out << ' ' << v;
    out << "\n";
  }
  out << "b";
  for (Vertex v : g.boundary) out << ' ' << v;
  out << "\n";
  if (g.modulator) {
    out << "x";
    for (Vertex v : *g.modulator) out << ' ' << v;
    out << "\n";
  }
  switch (g.target.kind) {
    case TargetClass::Kind::kNone: break;
    case TargetClass::Kind::kIndependent: out << "class independent\n"; break;
    case TargetClass::Kind::kForest: out << "class forest\n"; break;
    case TargetClass::Kind::kVertexCover: out << "class vc\n"; break;
    case TargetClass::Kind::kTreedepth: out << "class td " << g.target.depth << "\n"; break;
  }
  for (const Edge& e : g.graph.edges())
    out << "e " << e.u << ' ' << e.v << ' ' << e.mult << "\n";
  if (!g.td_parent.empty()) {
    out << "tdp";
    for (const auto& [c, p] : g.td_parent) out << ' ' << c << ' ' << p;
    out << "\n";
  }
  return out.str();
}

}  // namespace bk
