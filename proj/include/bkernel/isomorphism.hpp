// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <vector>

#include "bkernel/graph.hpp"

namespace bk {

namespace detail {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> gv;  // order in which g's vertices get mapped
  std::vector<Vertex> hv;
  std::map<Vertex, Vertex> map;
  VertexSet used;

  bool consistent(Vertex a, Vertex b) const {
    if (g.multiplicity(a, a) != h.multiplicity(b, b)) return false;
    for (const auto& [x, y] : map)
      if (g.multiplicity(a, x) != h.multiplicity(b, y)) return false;
    return true;
  }

  bool extend(size_t i) {
    if (i == gv.size()) return true;
    Vertex a = gv[i];
    for (Vertex b : hv) {
      if (used.count(b)) continue;
      if (g.degree(a) != h.degree(b)) continue;
      if (!consistent(a, b)) continue;
      map[a] = b;
      used.insert(b);
      if (extend(i + 1)) return true;
      map.erase(a);
      used.erase(b);
    }
    return false;
  }
};

}  // namespace detail

// True iff some isomorphism maps each boundary vertex to itself.
inline bool are_isomorphic_small(const BoundariedGraph& g,
                                 const BoundariedGraph& h, int cap = 12) {
  if (g.graph.num_vertices() > cap || h.graph.num_vertices() > cap)
    throw CapExceeded("are_isomorphic_small: vertex cap exceeded");
  if (g.boundary != h.boundary) return false;
  if (g.graph.num_vertices() != h.graph.num_vertices()) return false;
  if (g.graph.num_edges() != h.graph.num_edges()) return false;
  for (Vertex b : g.boundary)
    if (!g.graph.has_vertex(b) || !h.graph.has_vertex(b)) return false;

  detail::IsoSearch s{g.graph, h.graph, {}, {}, {}, {}};
  for (Vertex b : g.boundary) {
    if (g.graph.degree(b) != h.graph.degree(b)) return false;
    if (!s.consistent(b, b)) return false;
    s.map[b] = b;
    s.used.insert(b);
  }
  for (Vertex v : g.graph.vertex_list())
    if (!g.boundary.count(v)) s.gv.push_back(v);
  for (Vertex v : h.graph.vertex_list())
    if (!h.boundary.count(v)) s.hv.push_back(v);
  return s.extend(0);
}

}  // namespace bk
