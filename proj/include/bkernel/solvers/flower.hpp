// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "bkernel/graph.hpp"
#include "bkernel/solvers/matching.hpp"

namespace bk {

struct FlowerCertificate {
  Vertex center = -1;
  int order = 0;
  VertexSet deletion;  // X attaining |X| + sum_C floor(e(x, C) / 2) = order
};

// |X| + sum over components C of G - (X + x) of floor(e(x, C) / 2).
inline int flower_bound(const Graph& g, Vertex x, const VertexSet& del) {
  VertexSet drop = del;
  drop.insert(x);
  Graph rest = g.without(drop);
  int total = static_cast<int>(del.size());
  for (const VertexSet& comp : rest.components()) {
    int e = 0;
    for (Vertex v : comp) e += g.multiplicity(x, v);
    total += e / 2;
  }
  return total;
}

// Maximum number of cycles pairwise meeting only in x. A double edge x-u is a
// cycle of length two.
//
// Cycles through x are paths in G - x between distinct terminal copies, one
// terminal per edge end at x. The maximum number of disjoint such paths equals
// nu(H) - |V \ A| for the auxiliary graph H that adds a mirror v' of every
// non-terminal v (Gallai).
inline int max_flower_order(const Graph& g, Vertex x) {
  if (g.has_loop(x)) throw PreconditionError("max_flower: loop at center");
  std::vector<Vertex> inner;
  for (Vertex v : g.vertex_list())
    if (v != x) inner.push_back(v);
  std::map<Vertex, int> idx;
  const int k = static_cast<int>(inner.size());
  for (int i = 0; i < k; ++i) idx[inner[i]] = i;
  // Layout: inner 0..k-1, mirrors k..2k-1, terminals from 2k on.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, k + i});
  for (const Edge& e : g.edges()) {
    if (e.u == x || e.v == x || e.u == e.v) continue;
    int a = idx[e.u], b = idx[e.v];
    edges.push_back({a, b});
    edges.push_back({k + a, k + b});
  }
  int next = 2 * k;
  for (const auto& [v, m] : g.incident(x)) {
    if (v == x) continue;
    for (int c = 0; c < m; ++c) {
      int t = next++;
      edges.push_back({t, idx[v]});
      edges.push_back({t, k + idx[v]});
    }
  }
  auto mate = general_max_matching(next, edges);
  return matching_size(mate) - k;
}

// Order plus a set X attaining the min-max formula. X is searched by size,
// which is polynomial for bounded order.
inline FlowerCertificate max_flower(const Graph& g, Vertex x) {
  FlowerCertificate cert;
  cert.center = x;
  cert.order = max_flower_order(g, x);
  // Vertices outside the component of x never lower the bound.
  VertexSet reach;
  for (const VertexSet& comp : g.components())
    if (comp.count(x)) reach = comp;
  std::vector<Vertex> cand;
  for (Vertex v : reach)
    if (v != x) cand.push_back(v);
  const int n = static_cast<int>(cand.size());
  std::vector<int> pick;
  std::function<bool(int, int)> search = [&](int start, int left) -> bool {
    if (left == 0) {
      VertexSet del;
      for (int i : pick) del.insert(cand[i]);
      if (flower_bound(g, x, del) == cert.order) {
        cert.deletion = del;
        return true;
      }
      return false;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      if (search(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= std::min(cert.order, n); ++size)
    if (search(0, size)) return cert;
  throw std::logic_error("max_flower: no set attains the flower order");
}

struct ExpansionSets {
  std::vector<int> x;  // X' (left indices)
  std::vector<int> y;  // Y' (right indices)
};

// Left side X, right side Y. Peels Hall violators of the graph in which every
// X-vertex appears twice until the remaining X has a 2-expansion into the
// remaining Y.
inline ExpansionSets expansion_sets(const Bipartite& bip) {
  if (bip.left == 0) throw PreconditionError("expansion_sets: X is empty");
  if (bip.right < 2 * bip.left) throw PreconditionError("expansion_sets: |Y| < 2|X|");
  std::vector<bool> y_has(bip.right, false);
  for (const auto& a : bip.adj)
    for (int r : a) y_has[r] = true;
  for (int r = 0; r < bip.right; ++r)
    if (!y_has[r]) throw PreconditionError("expansion_sets: Y-vertex without X-neighbour");

  std::vector<bool> x_alive(bip.left, true), y_alive(bip.right, true);
  while (true) {
    std::vector<int> xs, ys, y_pos(bip.right, -1);
    for (int l = 0; l < bip.left; ++l)
      if (x_alive[l]) xs.push_back(l);
    for (int r = 0; r < bip.right; ++r)
      if (y_alive[r]) {
        y_pos[r] = static_cast<int>(ys.size());
        ys.push_back(r);
      }
    Bipartite doubled(2 * static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    for (size_t i = 0; i < xs.size(); ++i)
      for (int r : bip.adj[xs[i]])
        if (y_alive[r]) {
          doubled.add_edge(2 * static_cast<int>(i), y_pos[r]);
          doubled.add_edge(2 * static_cast<int>(i) + 1, y_pos[r]);
        }
    auto violator = hall_violator(doubled, Side::kLeft);
    if (!violator) return {xs, ys};
    for (int c : violator->set) x_alive[xs[c / 2]] = false;
    for (int r : violator->neighborhood) y_alive[ys[r]] = false;
  }
}

}  // namespace bk
