// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bkernel/graph.hpp"
#include "bkernel/solvers/dense.hpp"

namespace bk {

struct TreedepthDecomposition {
  VertexSet vertices;
  std::map<Vertex, Vertex> parent;  // roots have no entry
  int height = 0;

  std::vector<Vertex> roots() const {
    std::vector<Vertex> out;
    for (Vertex v : vertices)
      if (!parent.count(v)) out.push_back(v);
    return out;
  }
  int depth(Vertex v) const {
    int d = 1;
    for (auto it = parent.find(v); it != parent.end(); it = parent.find(it->second)) {
      ++d;
      if (d > static_cast<int>(vertices.size()) + 1) return INT_MAX;  // cycle
    }
    return d;
  }
  bool is_ancestor(Vertex a, Vertex v) const {
    for (auto it = parent.find(v); it != parent.end(); it = parent.find(it->second))
      if (it->second == a) return true;
    return false;
  }
};

// Empty string when dec is a valid decomposition of g, else the reason.
inline std::string check_decomposition(const Graph& g, const TreedepthDecomposition& dec) {
  if (dec.vertices != g.vertices()) return "decomposition vertex set differs from graph";
  int h = 0;
  for (const auto& [c, p] : dec.parent)
    if (!dec.vertices.count(c) || !dec.vertices.count(p)) return "parent pointer outside graph";
  for (Vertex v : dec.vertices) {
    int d = dec.depth(v);
    if (d == INT_MAX) return "parent pointers contain a cycle";
    h = std::max(h, d);
  }
  if (h != dec.height) return "height mismatch";
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!dec.is_ancestor(e.u, e.v) && !dec.is_ancestor(e.v, e.u))
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
             " joins unrelated vertices";
  }
  return {};
}

namespace detail {

// Exact treedepth of connected vertex subsets, memoized.
struct TdSolver {
  const DenseGraph& d;
  std::unordered_map<Mask, std::pair<int, int>> memo;  // mask -> (td, root)

  std::vector<Mask> split(Mask s) const {
    std::vector<Mask> parts;
    while (s) {
      Mask seen = bit(lowest(s)), frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= d.adj[lowest(m)];
        next &= s & ~seen;
        seen |= next;
        frontier = next;
      }
      parts.push_back(seen);
      s &= ~seen;
    }
    return parts;
  }

  int lower_bound(Mask s) const {
    // Cliques need every vertex on one root path; otherwise use 1.
    int n = popcount(s);
    int mindeg = n;
    for (Mask m = s; m; m &= m - 1) mindeg = std::min(mindeg, popcount(d.adj[lowest(m)] & s));
    return mindeg + 1 == n ? n : 1;
  }

  int td_connected(Mask s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second.first;
    int n = popcount(s);
    if (n == 1) {
      memo[s] = {1, lowest(s)};
      return 1;
    }
    int lb = lower_bound(s);
    int best = INT_MAX, root = -1;
    for (Mask m = s; m; m &= m - 1) {
      int v = lowest(m);
      int h = 0;
      for (Mask part : split(s & ~bit(v))) {
        h = std::max(h, td_connected(part));
        if (h + 1 >= best) break;
      }
      if (h + 1 < best) {
        best = h + 1;
        root = v;
        if (best <= lb) break;
      }
    }
    memo[s] = {best, root};
    return best;
  }

  void build(Mask s, int parent, TreedepthDecomposition& dec) {
    for (Mask part : split(s)) {
      td_connected(part);
      int root = memo.at(part).second;
      if (parent >= 0) dec.parent[d.ids[root]] = d.ids[parent];
      build(part & ~bit(root), root, dec);
    }
  }
};

}  // namespace detail

// Minimum-height decomposition, or nullopt when the treedepth exceeds budget.
inline std::optional<TreedepthDecomposition> treedepth_decompose(const Graph& g, int budget,
                                                                 int component_cap = 20) {
  TreedepthDecomposition dec;
  dec.vertices = g.vertices();
  for (const VertexSet& comp : g.components()) {
    if (static_cast<int>(comp.size()) > component_cap)
      throw CapExceeded("treedepth_decompose: component larger than cap");
    Graph h = g.induced(comp);
    DenseGraph d = to_dense(h);
    detail::TdSolver solver{d, {}};
    int td = solver.td_connected(d.all());
    if (td > budget) return std::nullopt;
    dec.height = std::max(dec.height, td);
    solver.build(d.all(), -1, dec);
  }
  return dec;
}

// Minimum vertex cover of g - forbidden, by DP over a decomposition of g.
// Runs in time O(2^height * n).
inline int vc_bounded_td_dp(const Graph& g, const TreedepthDecomposition& dec,
                            const VertexSet& forbidden = {}) {
  std::string why = check_decomposition(g, dec);
  if (!why.empty()) throw PreconditionError("vc_bounded_td_dp: " + why);
  std::map<Vertex, std::vector<Vertex>> children;
  for (const auto& [c, p] : dec.parent) children[p].push_back(c);

  // Solve the subtree at v given the in/out status of its ancestors (path
  // listed root-first, `chosen` bit i set when path[i] is in the cover).
  std::vector<Vertex> path;
  std::function<int(Vertex, std::uint64_t)> solve = [&](Vertex v, std::uint64_t chosen) {
    bool absent = forbidden.count(v) != 0;
    bool may_skip = true;
    if (!absent) {
      for (size_t i = 0; i < path.size(); ++i)
        if (!(chosen >> i & 1) && !forbidden.count(path[i]) && g.has_edge(v, path[i]))
          may_skip = false;
      if (g.has_loop(v)) may_skip = false;
    }
    auto subtree = [&](bool in) {
      path.push_back(v);
      std::uint64_t c = chosen | (std::uint64_t{in} << (path.size() - 1));
      int sum = in && !absent ? 1 : 0;
      for (Vertex w : children[v]) sum += solve(w, c);
      path.pop_back();
      return sum;
    };
    if (absent) return subtree(false);
    int best = subtree(true);
    if (may_skip) best = std::min(best, subtree(false));
    return best;
  };
  int total = 0;
  for (Vertex r : dec.roots()) total += solve(r, 0);
  return total;
}

}  // namespace bk
