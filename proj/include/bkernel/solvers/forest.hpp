// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bkernel/graph.hpp"

namespace bk {

// Simple and acyclic.
inline bool is_forest(const Graph& g) {
  if (!g.is_simple()) return false;
  return g.num_edges() == g.num_vertices() - static_cast<int>(g.components().size());
}

// Minimum vertex cover of a forest by leaf-to-root DP.
inline int vc_forest_dp(const Graph& g) {
  if (!is_forest(g)) throw PreconditionError("vc_forest_dp: input is not a forest");
  int total = 0;
  std::map<Vertex, int> take, skip;  // best cover of subtree with / without v
  for (const VertexSet& comp : g.components()) {
    Vertex root = *comp.begin();
    std::vector<std::pair<Vertex, Vertex>> order{{root, -1}};  // (v, parent)
    for (size_t i = 0; i < order.size(); ++i) {
      auto [v, p] = order[i];
      for (Vertex w : g.neighbors(v))
        if (w != p) order.push_back({w, v});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, p] = *it;
      int t = 1, s = 0;
      for (Vertex w : g.neighbors(v)) {
        if (w == p) continue;
        t += std::min(take[w], skip[w]);
        s += take[w];
      }
      take[v] = t;
      skip[v] = s;
    }
    total += std::min(take[root], skip[root]);
  }
  return total;
}

}  // namespace bk
