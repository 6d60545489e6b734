// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/kernels/vc_vc.hpp"
#include "bkernel/solvers/matching.hpp"
#include "bkernel/solvers/opt_value.hpp"

namespace bk {

// Vertices of R matched by a maximum matching of R against the given
// right-hand "slots"; a slot is a set of one or two boundary vertices and is
// adjacent to v when v sees all of it.
inline VertexSet matched_region(const BoundariedGraph& g, const std::vector<VertexSet>& slots) {
  const std::vector<Vertex> r = g.graph.induced(g.non_boundary()).vertex_list();
  Bipartite bip(static_cast<int>(r.size()), static_cast<int>(slots.size()));
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < slots.size(); ++j) {
      bool all = true;
      for (Vertex b : slots[j]) all = all && g.graph.has_edge(r[i], b);
      if (all) bip.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  Matching m = max_matching(bip);
  VertexSet out;
  for (size_t i = 0; i < r.size(); ++i)
    if (m.mate_left[i] >= 0) out.insert(r[i]);
  return out;
}

inline std::vector<VertexSet> boundary_pairs(const VertexSet& b) {
  std::vector<VertexSet> out;
  for (auto i = b.begin(); i != b.end(); ++i)
    for (auto j = std::next(i); j != b.end(); ++j) out.push_back({*i, *j});
  return out;
}

// Two R-vertices and two B-vertices forming a 4-cycle, smallest ids first.
inline std::optional<std::pair<VertexSet, VertexSet>> find_two_in_four_cycle(
    const BoundariedGraph& g) {
  const std::vector<VertexSet> pairs = boundary_pairs(g.boundary);
  for (const VertexSet& pq : pairs) {
    std::vector<Vertex> common;
    for (Vertex v : g.non_boundary())
      if (g.graph.has_edge(v, *pq.begin()) && g.graph.has_edge(v, *pq.rbegin()))
        common.push_back(v);
    if (common.size() >= 2) return std::make_pair(VertexSet{common[0], common[1]}, pq);
  }
  return std::nullopt;
}

inline KernelResult finish_path_kernel(const BoundariedGraph& g, BoundariedGraph work,
                                       const VertexSet& lifted) {
  KernelResult res;
  res.lifted_boundary = lifted;
  res.reduced = shrink_boundary(work, g.boundary);
  res.reduced.modulator = set_intersect(lifted, res.reduced.graph.vertices());
  res.reduced.target = TargetClass::independent();
  res.reduced.td_parent.clear();
  res.stats = make_stats(g.graph, res.reduced.graph);
  return res;
}

inline KernelResult kernelize_lc_vc(const BoundariedGraph& g, KernelOptions opts = {}) {
  require_modulator(g, TargetClass::independent(), "kernelize_lc_vc");
  BoundariedGraph work = lift_modulator_into_boundary(g);
  VertexSet keep = matched_region(work, boundary_pairs(work.boundary));
  if (opts.mutation != Mutation::kLcDropK)
    if (auto k = find_two_in_four_cycle(work)) keep.insert(k->first.begin(), k->first.end());
  VertexSet drop = set_minus(work.non_boundary(), keep);
  work.graph.remove_vertices(drop);
  KernelResult res = finish_path_kernel(g, work, work.boundary);
  res.trace.add("lc_delete", static_cast<int>(drop.size()));
  res.delta = 0;
  return res;
}

inline KernelResult kernelize_lp_vc(const BoundariedGraph& g, KernelOptions opts = {}) {
  require_modulator(g, TargetClass::independent(), "kernelize_lp_vc");
  BoundariedGraph work = lift_modulator_into_boundary(g);
  // A path may start and end in R next to the same boundary vertex, so
  // every singleton slot appears twice.
  std::vector<VertexSet> slots;
  for (Vertex b : work.boundary) {
    slots.push_back({b});
    slots.push_back({b});
  }
  for (const VertexSet& pq : boundary_pairs(work.boundary)) slots.push_back(pq);
  VertexSet keep = matched_region(work, slots);
  const VertexSet region = work.non_boundary();
  if (work.boundary.empty() && !region.empty()) keep.insert(*region.begin());
  VertexSet drop = set_minus(region, keep);
  work.graph.remove_vertices(drop);
  KernelResult res = finish_path_kernel(g, work, work.boundary);
  res.trace.add("lp_delete", static_cast<int>(drop.size()));
  res.delta = opts.mutation == Mutation::kLpWrongDelta ? 1 : 0;
  return res;
}

// Boundary vertices kept as an independent set plus two isolated vertices:
// no gluing has a Hamiltonian cycle or path.
inline BoundariedGraph hamiltonian_no_gadget(const VertexSet& boundary) {
  BoundariedGraph out;
  for (Vertex b : boundary) out.graph.add_vertex(b);
  Vertex f = out.graph.fresh_vertex();
  out.graph.add_vertex(f);
  out.graph.add_vertex(f + 1);
  out.boundary = boundary;
  return out;
}

inline KernelResult kernelize_hc_hp_vc(const BoundariedGraph& g, Problem which,
                                       KernelOptions = {}) {
  if (which != Problem::kHc && which != Problem::kHp)
    throw PreconditionError("kernelize_hc_hp_vc: problem must be hc or hp");
  require_modulator(g, TargetClass::independent(), "kernelize_hc_hp_vc");
  BoundariedGraph work = lift_modulator_into_boundary(g);
  const int bsize = static_cast<int>(work.boundary.size());
  if (work.graph.num_vertices() <= 2 * bsize + 1)
    return finish_path_kernel(g, work, work.boundary);
  BoundariedGraph gadget = hamiltonian_no_gadget(g.boundary);
  gadget.modulator = g.boundary;
  KernelResult res = finish_path_kernel(g, gadget, g.boundary);
  res.lifted_boundary = work.boundary;
  res.trace.add("hamiltonian_no_gadget");
  return res;
}

// Contracts adjacent degree-2 vertices outside B and the degree != 2 set,
// then hands the result to the vertex-cover kernel. Loops and parallel edges
// are ignored throughout since they never matter for Hamiltonicity.
inline KernelResult kernelize_hc_hp_deg2(const BoundariedGraph& g, Problem which,
                                         KernelOptions opts = {}) {
  BoundariedGraph work;
  work.boundary = g.boundary;
  for (Vertex v : g.graph.vertex_list()) work.graph.add_vertex(v);
  for (const Edge& e : g.graph.edges())
    if (e.u != e.v) work.graph.ensure_edge(e.u, e.v);
  VertexSet x;
  for (Vertex v : work.graph.vertex_list())
    if (work.graph.degree(v) != 2) x.insert(v);
  const VertexSet fixed = set_union(g.boundary, x);
  RuleTrace trace;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : work.graph.edges()) {
      if (fixed.count(e.u) || fixed.count(e.v)) continue;
      Vertex a = -1, b = -1;
      for (Vertex w : work.graph.neighbors(e.u))
        if (w != e.v) a = w;
      for (Vertex w : work.graph.neighbors(e.v))
        if (w != e.u) b = w;
      if (a == b) continue;  // triangle: contraction would change the answer
      work.graph.remove_vertex(e.v);
      work.graph.ensure_edge(e.u, b);
      trace.add("hamiltonian_contract");
      changed = true;
      break;
    }
  }
  // Pairs left adjacent put one endpoint into the modulator.
  for (const Edge& e : work.graph.edges())
    if (!fixed.count(e.u) && !fixed.count(e.v) && !x.count(e.u) && !x.count(e.v)) x.insert(e.u);
  work.modulator = set_union(x, g.boundary);
  KernelResult res = kernelize_hc_hp_vc(work, which, opts);
  trace.merge(res.trace);
  res.trace = trace;
  res.stats = make_stats(g.graph, res.reduced.graph);
  return res;
}

}  // namespace bk
