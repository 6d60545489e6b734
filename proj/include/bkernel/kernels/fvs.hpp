// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/kernels/vc_vc.hpp"
#include "bkernel/solvers/flower.hpp"
#include "bkernel/solvers/forest.hpp"
#include "bkernel/solvers/matching.hpp"

namespace bk {

// A degree-2 vertex between two boundary vertices that are not adjacent.
// Bypassing it would create a B-B edge that gluing merges with an attached
// copy of the same edge, losing the cycle through both.
inline bool is_boundary_bridge(const BoundariedGraph& g, Vertex v) {
  const auto& inc = g.graph.incident(v);
  if (g.graph.degree(v) != 2 || inc.size() != 2) return false;
  Vertex u = inc.begin()->first, w = inc.rbegin()->first;
  return g.boundary.count(u) && g.boundary.count(w) && g.graph.multiplicity(u, w) == 0;
}

inline bool rr_fvs_low_degree(BoundariedGraph& g) {
  for (Vertex v : g.non_boundary())
    if (g.graph.degree(v) <= 1) {
      g.graph.remove_vertex(v);
      return true;
    }
  return false;
}

inline bool rr_fvs_bypass(BoundariedGraph& g, Mutation mutation = Mutation::kNone) {
  for (Vertex v : g.non_boundary()) {
    if (g.graph.degree(v) != 2 || g.graph.has_loop(v)) continue;
    if (mutation != Mutation::kFvsBypassBoundaryPair && is_boundary_bridge(g, v)) continue;
    const auto inc = g.graph.incident(v);
    Vertex u = inc.begin()->first, w = inc.rbegin()->first;
    g.graph.remove_vertex(v);
    g.graph.add_edge(u, w);  // u == w gives a loop; a third copy is dropped
    return true;
  }
  return false;
}

// Low-degree rules to a fixpoint; returns the number of applications.
inline int rr_degree_cleanup(BoundariedGraph& g, RuleTrace& trace,
                             Mutation mutation = Mutation::kNone) {
  int applied = 0;
  while (true) {
    if (rr_fvs_low_degree(g)) {
      trace.add("fvs_deg01");
    } else if (rr_fvs_bypass(g, mutation)) {
      trace.add("fvs_deg2");
    } else {
      return applied;
    }
    ++applied;
  }
}

inline void isolate_with_loop(Graph& g, Vertex x) {
  for (Vertex w : g.neighbors(x)) g.remove_edge(x, w);
  g.set_multiplicity(x, x, 1);
}

inline bool rr_loop_cleanup(BoundariedGraph& g) {
  for (Vertex x : g.boundary)
    if (g.graph.has_loop(x) && g.graph.incident(x).size() > 1) {
      isolate_with_loop(g.graph, x);
      return true;
    }
  return false;
}

inline bool rr_flower(BoundariedGraph& g, Vertex x) {
  if (!g.boundary.count(x) || g.graph.has_loop(x)) return false;
  if (max_flower_order(g.graph, x) <= static_cast<int>(g.boundary.size())) return false;
  isolate_with_loop(g.graph, x);
  return true;
}

struct GallaiStructure {
  Vertex x = -1;
  VertexSet X;
  std::vector<VertexSet> components;
};

// Empty string when the structure satisfies the rule's four conditions.
inline std::string gallai_violation(const BoundariedGraph& g, const GallaiStructure& s) {
  VertexSet cut = s.X;
  cut.insert(s.x);
  if (s.X.count(s.x)) return "x lies in X";
  Graph rest = g.graph.without(cut);
  std::vector<VertexSet> all = rest.components();
  for (const VertexSet& c : s.components) {
    if (std::find(all.begin(), all.end(), c) == all.end())
      return "not a component of G - (X + x)";
    if (!set_intersect(c, g.boundary).empty()) return "component meets the boundary";
    int e = 0;
    for (Vertex v : c) e += g.graph.multiplicity(s.x, v);
    if (e != 1) return "component does not have exactly one edge to x";
    if (!is_forest(g.graph.induced(c))) return "component is not a tree";
  }
  if (s.X.empty()) return {};
  std::vector<Vertex> xs(s.X.begin(), s.X.end());
  Bipartite doubled(2 * static_cast<int>(xs.size()), static_cast<int>(s.components.size()));
  for (size_t j = 0; j < s.components.size(); ++j) {
    const VertexSet nb = neighborhood(g.graph, s.components[j]);
    for (size_t i = 0; i < xs.size(); ++i)
      if (nb.count(xs[i])) {
        doubled.add_edge(2 * static_cast<int>(i), static_cast<int>(j));
        doubled.add_edge(2 * static_cast<int>(i) + 1, static_cast<int>(j));
      }
  }
  if (max_matching(doubled).size != 2 * static_cast<int>(xs.size()))
    return "some Z in X has fewer than 2|Z| adjacent components";
  return {};
}

inline void rr_gallai(BoundariedGraph& g, const GallaiStructure& s) {
  std::string why = gallai_violation(g, s);
  if (!why.empty()) throw PreconditionError("rr_gallai: " + why);
  for (Vertex v : s.X) g.graph.set_multiplicity(s.x, v, 2);
  for (const VertexSet& c : s.components)
    for (Vertex v : c) g.graph.remove_edge(s.x, v);
}

inline int region_degree_count(const BoundariedGraph& g, Vertex x) {
  int d = 0;
  for (Vertex w : g.graph.neighbors(x)) d += !g.boundary.count(w);
  return d;
}

// For a boundary vertex with at least 5|B| neighbours outside B, applies a
// flower or a Gallai structure found from a maximum flower certificate.
// Returns the rule applied, or nullopt when the lower rules are not exhausted
// and no structure could be extracted.
inline std::optional<std::string> reduce_high_degree(BoundariedGraph& g, Vertex x) {
  const int b = static_cast<int>(g.boundary.size());
  if (!g.boundary.count(x) || region_degree_count(g, x) < 5 * b)
    throw PreconditionError("reduce_high_degree: degree below threshold");
  if (g.graph.has_loop(x)) return std::nullopt;
  FlowerCertificate cert = max_flower(g.graph, x);
  if (cert.order > b) {
    isolate_with_loop(g.graph, x);
    return "fvs_flower";
  }
  if (cert.deletion.empty()) return std::nullopt;
  VertexSet cut = cert.deletion;
  cut.insert(x);
  std::vector<VertexSet> ys;
  for (const VertexSet& c : g.graph.without(cut).components()) {
    if (!set_intersect(c, g.boundary).empty()) continue;
    int e = 0;
    for (Vertex v : c) e += g.graph.multiplicity(x, v);
    if (e != 1 || !is_forest(g.graph.induced(c))) continue;
    if (set_intersect(neighborhood(g.graph, c), cert.deletion).empty()) continue;
    ys.push_back(c);
  }
  std::vector<Vertex> xs(cert.deletion.begin(), cert.deletion.end());
  if (ys.size() < 2 * xs.size()) return std::nullopt;
  Bipartite bip(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (size_t j = 0; j < ys.size(); ++j) {
    VertexSet nb = neighborhood(g.graph, ys[j]);
    for (size_t i = 0; i < xs.size(); ++i)
      if (nb.count(xs[i])) bip.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  bip.normalize();
  ExpansionSets ex = expansion_sets(bip);
  if (ex.x.empty()) return std::nullopt;
  GallaiStructure s;
  s.x = x;
  for (int i : ex.x) s.X.insert(xs[i]);
  for (int j : ex.y) s.components.push_back(ys[j]);
  rr_gallai(g, s);
  return "fvs_gallai";
}

// Every way the reduced graph fails to be a fixpoint; empty when it is one.
inline std::vector<std::string> fvs_fixpoint_violations(const BoundariedGraph& g) {
  std::vector<std::string> out;
  const int b = static_cast<int>(g.boundary.size());
  for (Vertex v : g.non_boundary())
    if (g.graph.degree(v) < 3 && !is_boundary_bridge(g, v))
      out.push_back("vertex " + std::to_string(v) + " has degree " +
                    std::to_string(g.graph.degree(v)));
  for (Vertex x : g.boundary) {
    if (g.graph.has_loop(x) && g.graph.incident(x).size() > 1)
      out.push_back("looped vertex " + std::to_string(x) + " has further edges");
    if (region_degree_count(g, x) >= 5 * b)
      out.push_back("vertex " + std::to_string(x) + " has " +
                    std::to_string(region_degree_count(g, x)) + " neighbours outside B");
    if (!g.graph.has_loop(x) && max_flower_order(g.graph, x) > b)
      out.push_back("flower of order > |B| at " + std::to_string(x));
  }
  return out;
}

inline void exhaust_fvs_rules(BoundariedGraph& g, RuleTrace& trace,
                              Mutation mutation = Mutation::kNone) {
  while (true) {
    rr_degree_cleanup(g, trace, mutation);
    if (rr_loop_cleanup(g)) {
      trace.add("fvs_loop");
      continue;
    }
    bool fired = false;
    for (Vertex x : g.boundary)
      if (rr_flower(g, x)) {
        trace.add("fvs_flower");
        fired = true;
        break;
      }
    if (fired) continue;
    const int b = static_cast<int>(g.boundary.size());
    for (Vertex x : g.boundary) {
      if (b == 0 || region_degree_count(g, x) < 5 * b) continue;
      if (auto rule = reduce_high_degree(g, x)) {
        trace.add(*rule);
        fired = true;
        break;
      }
    }
    if (!fired) return;
  }
}

inline KernelResult kernelize_fvs_fvs(const BoundariedGraph& g, KernelOptions opts = {}) {
  require_modulator(g, TargetClass::forest(), "kernelize_fvs_fvs");
  KernelResult res;
  BoundariedGraph work = lift_modulator_into_boundary(g);
  work.td_parent.clear();
  res.lifted_boundary = work.boundary;
  exhaust_fvs_rules(work, res.trace, opts.mutation);
  res.reduced = shrink_boundary(work, g.boundary);
  res.reduced.modulator = res.lifted_boundary;
  res.reduced.target = TargetClass::forest();
  res.delta = 0;
  res.stats = make_stats(g.graph, res.reduced.graph);
  return res;
}

}  // namespace bk
