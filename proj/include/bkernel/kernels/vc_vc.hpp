// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/solvers/matching.hpp"
#include "bkernel/solvers/scc.hpp"
#include "bkernel/validate.hpp"

namespace bk {

struct Crown {
  VertexSet I;
  VertexSet H;
  std::vector<std::pair<Vertex, Vertex>> matching;  // (h, i), saturates H
};

struct CrownMarks {
  VertexSet marked_I;
  VertexSet marked_H;
};

// Deletes isolated non-boundary vertices; returns how many.
inline int rr_remove_isolated(BoundariedGraph& g) {
  int count = 0;
  for (Vertex v : g.graph.vertex_list())
    if (!g.boundary.count(v) && g.graph.incident(v).empty()) {
      g.graph.remove_vertex(v);
      ++count;
    }
  return count;
}

// Crown with I inside R, disjoint from the marks, read off a tail strongly
// connected component of the matching-oriented auxiliary bipartite graph.
inline std::optional<Crown> find_crown(const BoundariedGraph& g, const CrownMarks& marks) {
  const VertexSet marked = set_union(marks.marked_I, marks.marked_H);
  std::vector<Vertex> xs, ys;
  std::map<Vertex, int> xi, yi;
  for (Vertex v : g.graph.vertex_list()) {
    if (marked.count(v)) continue;
    yi[v] = static_cast<int>(ys.size());
    ys.push_back(v);
    if (!g.boundary.count(v)) {
      xi[v] = static_cast<int>(xs.size());
      xs.push_back(v);
    }
  }
  const int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
  if (nx == 0) return std::nullopt;
  Bipartite bip(nx, ny);
  for (Vertex u : xs)
    for (Vertex v : g.graph.neighbors(u))
      if (!marked.count(v)) bip.add_edge(xi[u], yi[v]);
  bip.normalize();
  Matching m = max_matching(bip);

  Digraph d(nx + ny);
  for (int l = 0; l < nx; ++l)
    for (int r : bip.adj[l]) d.add_arc(l, nx + r);
  for (int r = 0; r < ny; ++r)
    if (m.mate_right[r] >= 0) d.add_arc(nx + r, m.mate_right[r]);

  for (const auto& comp : tail_sccs(d)) {
    Crown c;
    for (int node : comp) {
      if (node < nx) c.I.insert(xs[node]);
      else c.H.insert(ys[node - nx]);
    }
    if (c.I.empty() || !set_intersect(c.I, c.H).empty()) continue;
    for (Vertex h : c.H) c.matching.push_back({h, xs[m.mate_right[yi[h]]]});
    return c;
  }
  return std::nullopt;
}

// Keeps only the matching edges at H and marks the crown.
inline void rr_crown_reduce(BoundariedGraph& g, const Crown& crown, CrownMarks& marks) {
  if (crown.I.empty()) throw PreconditionError("crown: I is empty");
  if (!set_intersect(crown.I, g.boundary).empty()) throw PreconditionError("crown: I meets B");
  for (Vertex a : crown.I)
    for (Vertex b : crown.I)
      if (g.graph.has_edge(a, b)) throw PreconditionError("crown: I is not independent");
  if (neighborhood(g.graph, crown.I) != crown.H) throw PreconditionError("crown: H != N(I)");
  std::map<Vertex, Vertex> mate;
  VertexSet used;
  for (auto [h, i] : crown.matching) {
    if (!crown.H.count(h) || !crown.I.count(i) || !g.graph.has_edge(h, i) ||
        !used.insert(i).second || !mate.emplace(h, i).second)
      throw PreconditionError("crown: invalid matching");
  }
  if (mate.size() != crown.H.size()) throw PreconditionError("crown: matching does not saturate H");
  for (Vertex h : crown.H) {
    for (const auto& [w, mult] : std::map<Vertex, int>(g.graph.incident(h)))
      if (w != mate[h]) g.graph.remove_edge(h, w);
  }
  marks.marked_I.insert(crown.I.begin(), crown.I.end());
  marks.marked_H.insert(crown.H.begin(), crown.H.end());
}

// Applies the isolated-vertex and crown rules until neither fires. Marks are
// local to the call. The auxiliary graph is rebuilt after every crown.
inline void exhaust_crown_rules(BoundariedGraph& g, RuleTrace& trace) {
  CrownMarks marks;
  trace.add("vc_isolated", rr_remove_isolated(g));
  while (auto crown = find_crown(g, marks)) {
    const int before = g.graph.num_edges();
    rr_crown_reduce(g, *crown, marks);
    // A crown that is already a bare matching only gets marked.
    if (g.graph.num_edges() != before) trace.add("vc_crown");
    int removed = rr_remove_isolated(g);
    trace.add("vc_isolated", removed);
    for (Vertex v : crown->I)
      if (!g.graph.has_vertex(v)) marks.marked_I.erase(v);
  }
}

inline void require_modulator(const BoundariedGraph& g, TargetClass cls, const char* what) {
  if (!g.modulator) throw PreconditionError(std::string(what) + ": modulator missing");
  BoundariedGraph probe = g;
  probe.target = cls;
  std::string why = class_violation(probe, *g.modulator);
  if (!why.empty()) throw PreconditionError(std::string(what) + ": invalid modulator: " + why);
}

inline KernelResult kernelize_vc_vc(const BoundariedGraph& g, KernelOptions opts = {}) {
  require_modulator(g, TargetClass::independent(), "kernelize_vc_vc");
  BoundariedGraph work = lift_modulator_into_boundary(g);
  KernelResult res;
  res.lifted_boundary = work.boundary;
  exhaust_crown_rules(work, res.trace);
  res.reduced = shrink_boundary(work, g.boundary);
  res.reduced.modulator = set_intersect(res.lifted_boundary, res.reduced.graph.vertices());
  res.reduced.target = g.target.kind == TargetClass::Kind::kNone ? TargetClass::independent()
                                                                  : g.target;
  res.reduced.td_parent.clear();
  res.delta = 0;
  if (opts.mutation == Mutation::kVcWrongDelta) res.delta = 1;
  if (opts.mutation == Mutation::kVcDropBoundary) drop_boundary_vertex(res.reduced);
  res.stats = make_stats(g.graph, res.reduced.graph);
  return res;
}

}  // namespace bk
