// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <string>
#include <vector>

#include "bkernel/graph.hpp"
#include "bkernel/solvers/forest.hpp"
#include "bkernel/solvers/treedepth.hpp"

namespace bk {

// Treedepth decomposition of g - modulator from the sidecar, when it covers
// exactly those vertices.
inline std::optional<TreedepthDecomposition> sidecar_decomposition(const BoundariedGraph& g,
                                                                   const VertexSet& drop) {
  if (g.td_parent.empty()) return std::nullopt;
  Graph rest = g.graph.without(drop);
  TreedepthDecomposition dec;
  dec.vertices = rest.vertices();
  for (const auto& [c, p] : g.td_parent) {
    if (!dec.vertices.count(c) || !dec.vertices.count(p)) return std::nullopt;
    dec.parent[c] = p;
  }
  int h = 0;
  for (Vertex v : dec.vertices) h = std::max(h, dec.depth(v));
  dec.height = h;
  if (!check_decomposition(rest, dec).empty()) return std::nullopt;
  return dec;
}

// Whether g - drop lies in the target class; empty string when it does.
inline std::string class_violation(const BoundariedGraph& g, const VertexSet& drop) {
  Graph rest = g.graph.without(drop);
  switch (g.target.kind) {
    case TargetClass::Kind::kNone: return {};
    case TargetClass::Kind::kIndependent:
    case TargetClass::Kind::kVertexCover:
      if (rest.num_edges() != 0) return "graph minus modulator has edges";
      return {};
    case TargetClass::Kind::kForest:
      if (!is_forest(rest)) return "graph minus modulator is not a forest";
      return {};
    case TargetClass::Kind::kTreedepth: {
      if (!g.td_parent.empty()) {
        auto dec = sidecar_decomposition(g, drop);
        if (!dec) return "treedepth sidecar is not a decomposition of graph minus modulator";
        if (dec->height > g.target.depth) return "treedepth sidecar exceeds the class depth";
        return {};
      }
      try {
        if (!treedepth_decompose(rest, g.target.depth))
          return "graph minus modulator exceeds the class treedepth";
      } catch (const CapExceeded&) {
        return "treedepth of graph minus modulator cannot be verified (component too large)";
      }
      return {};
    }
  }
  return {};
}

// Invariant violations, one message each; empty for a valid instance.
inline std::vector<std::string> validate(const BoundariedGraph& g) {
  std::vector<std::string> out;
  for (Vertex b : g.boundary)
    if (!g.graph.has_vertex(b)) out.push_back("boundary vertex " + std::to_string(b) + " not in graph");
  if (g.modulator)
    for (Vertex x : *g.modulator)
      if (!g.graph.has_vertex(x))
        out.push_back("modulator vertex " + std::to_string(x) + " not in graph");
  for (const Edge& e : g.graph.edges()) {
    if (e.u == e.v && e.mult != 1)
      out.push_back("loop at " + std::to_string(e.u) + " has multiplicity " + std::to_string(e.mult));
    else if (e.mult < 1 || e.mult > 2)
      out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " has multiplicity " + std::to_string(e.mult));
  }
  if (g.target.kind == TargetClass::Kind::kTreedepth && g.target.depth < 1)
    out.push_back("treedepth class needs d >= 1");
  if (g.modulator && g.target.kind != TargetClass::Kind::kNone && out.empty()) {
    std::string why = class_violation(g, *g.modulator);
    if (!why.empty()) out.push_back(why);
  }
  return out;
}

}  // namespace bk
