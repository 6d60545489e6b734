// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <map>

#include "bkernel/graph.hpp"

namespace bk {

struct GlueMapping {
  // Vertex of h -> vertex of the glued graph.
  std::map<Vertex, Vertex> from_h;
};

// Disjoint union of g and h identifying the shared boundary vertices
// g.boundary ∩ h.boundary. Vertices of h that collide with ids of g but are
// not shared get fresh ids, assigned in ascending order. Edges present on
// both sides keep the larger multiplicity.
inline Graph glue(const BoundariedGraph& g, const BoundariedGraph& h,
                  GlueMapping* mapping = nullptr) {
  const VertexSet shared = set_intersect(g.boundary, h.boundary);
  Graph out = g.graph;
  Vertex next = std::max(g.graph.fresh_vertex(), h.graph.fresh_vertex());
  std::map<Vertex, Vertex> rename;
  for (Vertex v : h.graph.vertex_list()) {
    if (shared.count(v) || !g.graph.has_vertex(v)) {
      rename[v] = v;
    } else {
      rename[v] = next++;
    }
    out.add_vertex(rename[v]);
  }
  for (const Edge& e : h.graph.edges()) {
    Vertex a = rename[e.u], b = rename[e.v];
    out.set_multiplicity(a, b, std::max(out.multiplicity(a, b), e.mult));
  }
  if (mapping) mapping->from_h = std::move(rename);
  return out;
}

// Gluing that keeps a boundary: the union of both boundaries, renamed.
inline BoundariedGraph glue_boundaried(const BoundariedGraph& g,
                                       const BoundariedGraph& h) {
  GlueMapping map;
  BoundariedGraph out;
  out.graph = glue(g, h, &map);
  out.boundary = g.boundary;
  for (Vertex v : h.boundary) out.boundary.insert(map.from_h.at(v));
  return out;
}

inline BoundariedGraph shrink_boundary(const BoundariedGraph& g,
                                       const VertexSet& b) {
  if (!is_subset(b, g.boundary))
    throw PreconditionError("shrink_boundary: new boundary is not a subset");
  BoundariedGraph out = g;
  out.boundary = b;
  return out;
}

inline BoundariedGraph lift_modulator_into_boundary(const BoundariedGraph& g) {
  if (!g.modulator) throw PreconditionError("modulator missing");
  BoundariedGraph out = g;
  out.boundary = set_union(g.boundary, *g.modulator);
  out.modulator = out.boundary;
  // Re-hang every surviving vertex under its nearest surviving ancestor.
  std::map<Vertex, Vertex> parent;
  for (const auto& [c, p0] : g.td_parent) {
    if (out.boundary.count(c)) continue;
    Vertex p = p0;
    int guard = 0;
    while (out.boundary.count(p) && g.td_parent.count(p) &&
           ++guard <= static_cast<int>(g.td_parent.size()))
      p = g.td_parent.at(p);
    if (!out.boundary.count(p)) parent[c] = p;
  }
  out.td_parent = std::move(parent);
  return out;
}

}  // namespace bk
