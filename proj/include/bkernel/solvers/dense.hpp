// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "bkernel/graph.hpp"

namespace bk {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }

// Bitmask view of a graph with at most 64 vertices; index i is the i-th
// smallest vertex id.
struct DenseGraph {
  int n = 0;
  std::vector<Vertex> ids;
  std::vector<Mask> adj;     // simple neighbours, loops excluded
  std::vector<Mask> dbl;     // neighbours joined by a double edge
  Mask loops = 0;

  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
  bool multigraph() const {
    if (loops) return true;
    for (Mask m : dbl)
      if (m) return true;
    return false;
  }
};

inline DenseGraph to_dense(const Graph& g) {
  DenseGraph d;
  d.ids = g.vertex_list();
  d.n = static_cast<int>(d.ids.size());
  if (d.n > 64) throw CapExceeded("dense view limited to 64 vertices");
  d.adj.assign(d.n, 0);
  d.dbl.assign(d.n, 0);
  std::map<Vertex, int> idx;
  for (int i = 0; i < d.n; ++i) idx[d.ids[i]] = i;
  for (const Edge& e : g.edges()) {
    int a = idx[e.u], b = idx[e.v];
    if (a == b) {
      d.loops |= bit(a);
      continue;
    }
    d.adj[a] |= bit(b);
    d.adj[b] |= bit(a);
    if (e.mult >= 2) {
      d.dbl[a] |= bit(b);
      d.dbl[b] |= bit(a);
    }
  }
  return d;
}

inline int induced_edges(const DenseGraph& d, Mask s) {
  int twice = 0;
  for (Mask m = s; m; m &= m - 1) twice += popcount(d.adj[lowest(m)] & s);
  return twice / 2;
}

inline bool connected(const DenseGraph& d, Mask s) {
  if (!s) return true;
  Mask seen = bit(lowest(s)), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= d.adj[lowest(m)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace bk
