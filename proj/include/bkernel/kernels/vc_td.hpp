// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/kernels/vc_fvs.hpp"
#include "bkernel/kernels/vc_vc.hpp"
#include "bkernel/solvers/matching.hpp"
#include "bkernel/solvers/treedepth.hpp"

namespace bk {

// Parent pointers restricted to `keep`, every vertex re-hung under its
// nearest ancestor inside `keep`.
inline std::map<Vertex, Vertex> restrict_parents(const std::map<Vertex, Vertex>& parent,
                                                 const VertexSet& keep) {
  std::map<Vertex, Vertex> out;
  for (const auto& [c, p0] : parent) {
    if (!keep.count(c)) continue;
    Vertex p = p0;
    size_t guard = 0;
    while (!keep.count(p) && parent.count(p) && ++guard <= parent.size()) p = parent.at(p);
    if (keep.count(p)) out[c] = p;
  }
  return out;
}

// Largest size of a minimal blocking set for treedepth d >= 2.
inline int chunk_bound(int d) { return (1 << (d - 2)) + 1; }

struct TdComponent {
  VertexSet vertices;
  TreedepthDecomposition dec;
  int vc = 0;
};

struct TdChunkSystem {
  int b = 0;
  std::vector<VertexSet> chunks;
  std::vector<TdComponent> components;
  Bipartite a;  // chunks (left) vs components (right), edge iff conf > 0
  Matching matching;
  std::vector<int> violator;   // chunk indices of X'
  std::vector<int> deletable;  // component indices of F_D
};

// Decompositions of the components of g - B with height <= d, from the
// sidecar when it fits, otherwise computed.
inline std::vector<TdComponent> decompose_region(const BoundariedGraph& g, int d) {
  std::vector<TdComponent> out;
  Graph rest = g.graph.induced(g.non_boundary());
  for (const VertexSet& comp : rest.components()) {
    TdComponent c;
    c.vertices = comp;
    Graph f = rest.induced(comp);
    c.dec.vertices = comp;
    c.dec.parent = restrict_parents(g.td_parent, comp);
    int h = 0;
    for (Vertex v : comp) h = std::max(h, c.dec.depth(v));
    c.dec.height = h;
    if (!check_decomposition(f, c.dec).empty() || h > d) {
      auto dec = treedepth_decompose(f, d);
      if (!dec) throw PreconditionError("treedepth of G - B exceeds the class depth");
      c.dec = *dec;
    }
    c.vc = vc_bounded_td_dp(f, c.dec);
    out.push_back(std::move(c));
  }
  return out;
}

inline int conf_td(const Graph& g, const TdComponent& f, const VertexSet& z) {
  VertexSet nz = set_intersect(neighborhood(g, z), f.vertices);
  return vc_bounded_td_dp(g.induced(f.vertices), f.dec, nz) + static_cast<int>(nz.size()) - f.vc;
}

inline TdChunkSystem build_chunk_system(const BoundariedGraph& g, int d) {
  if (d < 2) throw PreconditionError("build_chunk_system: d must be at least 2");
  TdChunkSystem sys;
  sys.b = chunk_bound(d);
  sys.components = decompose_region(g, d);
  sys.chunks = enumerate_chunks(g.graph, g.boundary, sys.b);
  const int nc = static_cast<int>(sys.chunks.size());
  const int nf = static_cast<int>(sys.components.size());
  sys.a = Bipartite(nc, nf);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nf; ++j)
      if (conf_td(g.graph, sys.components[j], sys.chunks[i]) > 0) sys.a.add_edge(i, j);
  sys.a.normalize();
  std::vector<bool> dominated(nf, false);
  if (auto h = hall_violator(sys.a, Side::kLeft)) {
    sys.matching = h->matching;
    sys.violator = h->set;
    for (int j : h->neighborhood) dominated[j] = true;
  } else {
    sys.matching = max_matching(sys.a);
  }
  for (int j = 0; j < nf; ++j)
    if (!dominated[j] && sys.matching.mate_right[j] < 0) sys.deletable.push_back(j);
  return sys;
}

// Deletes F_D; returns the offset gained.
inline long long rr_delete_unmatched_components(BoundariedGraph& g, const TdChunkSystem& sys) {
  long long gained = 0;
  for (int j : sys.deletable) {
    gained += sys.components[j].vc;
    g.graph.remove_vertices(sys.components[j].vertices);
  }
  return gained;
}

namespace detail {

// Kernel at depth d with the boundary as modulator; returns the reduced
// graph with the same boundary and adds the offset to `delta`.
inline BoundariedGraph vc_td_core(BoundariedGraph g, int d, RuleTrace& trace,
                                  long long& delta) {
  if (d == 1) {
    exhaust_crown_rules(g, trace);
    return g;
  }
  TdChunkSystem sys = build_chunk_system(g, d);
  delta += rr_delete_unmatched_components(g, sys);
  trace.add("vctd_delete_components", static_cast<int>(sys.deletable.size()));

  std::vector<const TdComponent*> kept;
  for (size_t j = 0; j < sys.components.size(); ++j)
    if (std::find(sys.deletable.begin(), sys.deletable.end(), static_cast<int>(j)) ==
        sys.deletable.end())
      kept.push_back(&sys.components[j]);
  std::stable_sort(kept.begin(), kept.end(), [](const TdComponent* x, const TdComponent* y) {
    return x->vertices.size() > y->vertices.size();
  });

  BoundariedGraph out;
  out.graph = g.graph.induced(g.boundary);
  out.boundary = g.boundary;
  const size_t group = std::max<size_t>(1, g.boundary.size());
  for (size_t start = 0; start < kept.size(); start += group) {
    VertexSet members, roots;
    std::map<Vertex, Vertex> parent;
    for (size_t j = start; j < std::min(kept.size(), start + group); ++j) {
      members.insert(kept[j]->vertices.begin(), kept[j]->vertices.end());
      for (Vertex r : kept[j]->dec.roots()) roots.insert(r);
      parent.insert(kept[j]->dec.parent.begin(), kept[j]->dec.parent.end());
    }
    BoundariedGraph part;
    part.graph = g.graph.induced(set_union(g.boundary, members));
    part.boundary = set_union(g.boundary, roots);
    part.modulator = part.boundary;
    part.td_parent = restrict_parents(parent, set_minus(members, roots));
    BoundariedGraph reduced = vc_td_core(part, d - 1, trace, delta);
    reduced = shrink_boundary(reduced, g.boundary);
    out.graph = glue(out, reduced);
    trace.add("vctd_group");
  }
  return out;
}

}  // namespace detail

inline KernelResult kernelize_vc_td(const BoundariedGraph& g, int d, KernelOptions opts = {}) {
  if (d < 1) throw PreconditionError("kernelize_vc_td: d must be at least 1");
  if (d == 1) return kernelize_vc_vc(g, opts);
  require_modulator(g, TargetClass::treedepth(d), "kernelize_vc_td");
  BoundariedGraph work = lift_modulator_into_boundary(g);
  KernelResult res;
  res.lifted_boundary = work.boundary;
  long long delta = 0;
  BoundariedGraph core = detail::vc_td_core(work, d, res.trace, delta);
  res.reduced = shrink_boundary(core, g.boundary);
  const VertexSet alive = res.reduced.graph.vertices();
  res.reduced.modulator = set_intersect(res.lifted_boundary, alive);
  res.reduced.target = TargetClass::treedepth(d);
  // The output minus the modulator is a subgraph of the input minus it.
  std::map<Vertex, Vertex> full;
  for (const TdComponent& c : decompose_region(work, d))
    full.insert(c.dec.parent.begin(), c.dec.parent.end());
  res.reduced.td_parent = restrict_parents(full, set_minus(alive, *res.reduced.modulator));
  res.delta = delta;
  if (opts.mutation == Mutation::kVcTdDropBoundary) drop_boundary_vertex(res.reduced);
  res.stats = make_stats(g.graph, res.reduced.graph);
  return res;
}

struct RegularKernel {
  BoundariedGraph instance;
  long long ell = 0;
  long long delta = 0;
  bool trivial_no = false;
};

// Kernel for "vertex cover of size at most ell" with a modulator to
// treedepth d, through the boundaried kernel with an empty boundary.
inline RegularKernel regular_kernel_vc_td(const Graph& g, const VertexSet& x, int d,
                                          long long ell) {
  BoundariedGraph in;
  in.graph = g;
  in.modulator = x;
  in.target = TargetClass::treedepth(d);
  KernelResult res = kernelize_vc_td(in, d);
  RegularKernel out;
  out.delta = *res.delta;
  if (out.delta > ell) {
    out.trivial_no = true;
    out.instance.graph = Graph::with_vertices(2);
    out.instance.graph.add_edge(0, 1);
    out.instance.modulator = VertexSet{0};
    out.instance.target = TargetClass::treedepth(d);
    out.ell = 0;
    return out;
  }
  out.instance = res.reduced;
  out.ell = ell - out.delta;
  return out;
}

}  // namespace bk
