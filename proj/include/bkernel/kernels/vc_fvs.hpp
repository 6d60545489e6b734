// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/kernels/vc_vc.hpp"
#include "bkernel/solvers/forest.hpp"
#include "bkernel/solvers/matching.hpp"

namespace bk {

// Independent subsets of `pool` with 1..max_size vertices, by size then
// lexicographically.
inline std::vector<VertexSet> enumerate_chunks(const Graph& g, const VertexSet& pool,
                                               int max_size) {
  std::vector<Vertex> p(pool.begin(), pool.end());
  std::vector<VertexSet> out;
  std::vector<Vertex> cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      out.push_back(VertexSet(cur.begin(), cur.end()));
      return;
    }
    for (size_t i = start; i < p.size(); ++i) {
      bool ok = true;
      for (Vertex c : cur) ok = ok && !g.has_edge(c, p[i]);
      if (!ok) continue;
      cur.push_back(p[i]);
      rec(i + 1, left - 1);
      cur.pop_back();
    }
  };
  for (int s = 1; s <= max_size; ++s) rec(0, s);
  return out;
}

// conf(F, Z) for a tree (or forest) F given by its vertex set.
inline int conf_forest(const Graph& g, const VertexSet& f, const VertexSet& z) {
  Graph sub = g.induced(f);
  VertexSet nz = set_intersect(neighborhood(g, z), f);
  return vc_forest_dp(sub.without(nz)) + static_cast<int>(nz.size()) - vc_forest_dp(sub);
}

// Working state of the VC[fvs] rules: the boundary is B', `leaves` is L.
struct VcFvsState {
  BoundariedGraph g;
  VertexSet leaves;
  long long delta = 0;

  VertexSet region() const { return set_minus(g.non_boundary(), leaves); }
  std::vector<VertexSet> chunks() const { return enumerate_chunks(g.graph, g.boundary, 2); }
  std::vector<VertexSet> components() const { return g.graph.induced(region()).components(); }
  int region_degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g.graph.neighbors(v)) d += !g.boundary.count(w) && !leaves.count(w);
    return d;
  }
  std::vector<Vertex> region_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g.graph.neighbors(v))
      if (!g.boundary.count(w) && !leaves.count(w)) out.push_back(w);
    return out;
  }
  VertexSet boundary_neighbors(Vertex v) const {
    VertexSet out;
    for (Vertex w : g.graph.neighbors(v))
      if (g.boundary.count(w)) out.insert(w);
    return out;
  }
};

// Moves the vertices left unmatched by a maximum matching of G[R] into the
// boundary. Returns them.
inline VertexSet perfect_matching_cleanup(BoundariedGraph& g) {
  const VertexSet r = g.non_boundary();
  Graph sub = g.graph.induced(r);
  if (!is_forest(sub)) throw PreconditionError("perfect_matching_cleanup: G - B is not a forest");
  std::vector<Vertex> ids(r.begin(), r.end());
  std::map<Vertex, int> idx;
  for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : sub.edges()) edges.push_back({idx[e.u], idx[e.v]});
  auto mate = general_max_matching(static_cast<int>(ids.size()), edges);
  VertexSet moved;
  for (size_t i = 0; i < ids.size(); ++i)
    if (mate[i] < 0) moved.insert(ids[i]);
  g.boundary.insert(moved.begin(), moved.end());
  return moved;
}

inline bool blockable(const VcFvsState& s, const std::vector<VertexSet>& chunks, Vertex u,
                      Vertex v) {
  for (const VertexSet& z : chunks) {
    bool seen_u = false, seen_v = false;
    for (Vertex x : z) {
      seen_u = seen_u || s.g.graph.has_edge(x, u);
      seen_v = seen_v || s.g.graph.has_edge(x, v);
    }
    if (seen_u && seen_v) return true;
  }
  return false;
}

// Total conflict of every chunk on G[R].
inline long long active_conflicts(const VcFvsState& s) {
  long long total = 0;
  auto comps = s.components();
  for (const VertexSet& z : s.chunks())
    for (const VertexSet& f : comps) total += conf_forest(s.g.graph, f, z);
  return total;
}

inline bool rr_zero_conflict_component(VcFvsState& s, const std::vector<VertexSet>& chunks) {
  for (const VertexSet& f : s.components()) {
    bool quiet = true;
    for (const VertexSet& z : chunks)
      if (conf_forest(s.g.graph, f, z) > 0) {
        quiet = false;
        break;
      }
    if (!quiet) continue;
    s.delta += vc_forest_dp(s.g.graph.induced(f));
    s.g.graph.remove_vertices(f);
    return true;
  }
  return false;
}

// Returns the rule name that fired, or nullptr.
inline const char* rr_heavy_chunk(VcFvsState& s, const std::vector<VertexSet>& chunks) {
  auto comps = s.components();
  const long long threshold = static_cast<long long>(s.g.boundary.size());
  for (const VertexSet& z : chunks) {
    long long c = 0;
    for (const VertexSet& f : comps) c += conf_forest(s.g.graph, f, z);
    if (c < threshold) continue;
    if (z.size() == 1) {
      Vertex x = *z.begin();
      for (Vertex r : s.region_neighbors(x)) s.g.graph.remove_edge(x, r);
      Vertex leaf = s.g.graph.fresh_vertex();
      s.g.graph.add_vertex(leaf);
      s.g.graph.add_edge(x, leaf);
      s.leaves.insert(leaf);
      return "vcfvs_chunk1";
    }
    s.g.graph.ensure_edge(*z.begin(), *z.rbegin());
    return "vcfvs_chunk2";
  }
  return nullptr;
}

inline bool rr_unblockable_pair(VcFvsState& s, const std::vector<VertexSet>& chunks,
                                Mutation mutation = Mutation::kNone) {
  for (Vertex u : s.region()) {
    if (s.region_degree(u) > 2) continue;
    for (Vertex v : s.region_neighbors(u)) {
      if (v < u || s.region_degree(v) > 2 || blockable(s, chunks, u, v)) continue;
      std::optional<Vertex> t, w;
      for (Vertex a : s.region_neighbors(u))
        if (a != v) t = a;
      for (Vertex a : s.region_neighbors(v))
        if (a != u) w = a;
      const VertexSet nbu = s.boundary_neighbors(u), nbv = s.boundary_neighbors(v);
      s.g.graph.remove_vertex(u);
      s.g.graph.remove_vertex(v);
      s.delta += 1;
      if (mutation != Mutation::kConf1SkipRewire) {
        if (t)
          for (Vertex x : nbv) s.g.graph.ensure_edge(*t, x);
        if (w)
          for (Vertex x : nbu) s.g.graph.ensure_edge(*w, x);
      }
      if (t && w && mutation != Mutation::kConf1SkipEdge) s.g.graph.ensure_edge(*t, *w);
      return true;
    }
  }
  return false;
}

inline bool rr_unblockable_quad(VcFvsState& s, const std::vector<VertexSet>& chunks,
                                Mutation mutation = Mutation::kNone) {
  for (Vertex t : s.region()) {
    auto nt = s.region_neighbors(t);
    if (nt.size() != 1) continue;
    Vertex u = nt[0];
    if (s.region_degree(u) != 3 || blockable(s, chunks, u, t)) continue;
    for (Vertex v : s.region_neighbors(u)) {
      if (v == t || s.region_degree(v) != 3) continue;
      for (Vertex w : s.region_neighbors(v)) {
        if (w == u || s.region_degree(w) != 1) continue;
        if (blockable(s, chunks, v, w) || blockable(s, chunks, t, w)) continue;
        Vertex p = -1, q = -1;
        for (Vertex a : s.region_neighbors(u))
          if (a != t && a != v) p = a;
        for (Vertex a : s.region_neighbors(v))
          if (a != w && a != u) q = a;
        const VertexSet nbt = s.boundary_neighbors(t), nbw = s.boundary_neighbors(w);
        for (Vertex a : {t, u, v, w}) s.g.graph.remove_vertex(a);
        s.delta += 2;
        if (mutation != Mutation::kConf2SkipRewire) {
          for (Vertex x : nbt) s.g.graph.ensure_edge(p, x);
          for (Vertex x : nbw) s.g.graph.ensure_edge(q, x);
        }
        return true;
      }
    }
  }
  return false;
}

// Runs the component, heavy-chunk and conflict-structure rules to a fixpoint.
inline void exhaust_vc_fvs_rules(VcFvsState& s, RuleTrace& trace,
                                 Mutation mutation = Mutation::kNone) {
  while (true) {
    const auto chunks = s.chunks();
    if (rr_zero_conflict_component(s, chunks)) {
      trace.add("vcfvs_component");
      continue;
    }
    if (const char* rule = rr_heavy_chunk(s, chunks)) {
      trace.add(rule);
      continue;
    }
    if (rr_unblockable_pair(s, chunks, mutation)) {
      trace.add("vcfvs_conf1");
      continue;
    }
    if (rr_unblockable_quad(s, chunks, mutation)) {
      trace.add("vcfvs_conf2");
      continue;
    }
    return;
  }
}

inline KernelResult kernelize_vc_fvs(const BoundariedGraph& g, KernelOptions opts = {}) {
  require_modulator(g, TargetClass::forest(), "kernelize_vc_fvs");
  KernelResult res;
  VcFvsState s;
  s.g = lift_modulator_into_boundary(g);
  s.g.td_parent.clear();
  exhaust_crown_rules(s.g, res.trace);
  res.trace.add("vcfvs_matching_cleanup",
                static_cast<int>(perfect_matching_cleanup(s.g).size()));
  exhaust_vc_fvs_rules(s, res.trace, opts.mutation);
  res.lifted_boundary = s.g.boundary;
  res.reduced = shrink_boundary(s.g, g.boundary);
  res.reduced.modulator = set_union(s.g.boundary, s.leaves);
  res.reduced.target = TargetClass::forest();
  res.delta = s.delta + (opts.mutation == Mutation::kVcFvsWrongDelta ? 1 : 0);
  res.stats = make_stats(g.graph, res.reduced.graph);
  return res;
}

}  // namespace bk
