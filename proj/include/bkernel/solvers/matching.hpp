// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace bk {

// Bipartite graph with sides 0..left-1 and 0..right-1.
struct Bipartite {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // left -> right

  Bipartite() = default;
  Bipartite(int l, int r) : left(l), right(r), adj(l) {}
  void add_edge(int l, int r) { adj[l].push_back(r); }
  void normalize() {
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }
  Bipartite transposed() const {
    Bipartite t(right, left);
    for (int l = 0; l < left; ++l)
      for (int r : adj[l]) t.add_edge(r, l);
    t.normalize();
    return t;
  }
};

struct Matching {
  std::vector<int> mate_left;   // -1 when unmatched
  std::vector<int> mate_right;
  int size = 0;

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < static_cast<int>(mate_left.size()); ++l)
      if (mate_left[l] >= 0) out.push_back({l, mate_left[l]});
    return out;
  }
};

// Hopcroft-Karp. Adjacency lists are scanned in ascending order, so the result
// depends only on the input.
inline Matching max_matching(Bipartite bip) {
  bip.normalize();
  Matching m;
  m.mate_left.assign(bip.left, -1);
  m.mate_right.assign(bip.right, -1);
  std::vector<int> dist(bip.left);
  std::vector<size_t> it(bip.left);

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int l = 0; l < bip.left; ++l) {
      if (m.mate_left[l] < 0) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = INT_MAX;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : bip.adj[l]) {
        int l2 = m.mate_right[r];
        if (l2 < 0) {
          found = true;
        } else if (dist[l2] == INT_MAX) {
          dist[l2] = dist[l] + 1;
          q.push(l2);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  auto dfs = [&](int root) {
    std::vector<int> path{root};
    while (!path.empty()) {
      int l = path.back();
      bool advanced = false;
      while (it[l] < bip.adj[l].size()) {
        int r = bip.adj[l][it[l]];
        int l2 = m.mate_right[r];
        if (l2 < 0) {
          // Augment along the path.
          for (int k = static_cast<int>(path.size()) - 1; k >= 0; --k) {
            int pl = path[k];
            int pr = bip.adj[pl][it[pl]];
            m.mate_left[pl] = pr;
            m.mate_right[pr] = pl;
          }
          return true;
        }
        if (dist[l2] == dist[l] + 1) {
          path.push_back(l2);
          advanced = true;
          break;
        }
        ++it[l];
      }
      if (!advanced) {
        dist[l] = INT_MAX;
        path.pop_back();
        if (!path.empty()) ++it[path.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int l = 0; l < bip.left; ++l)
      if (m.mate_left[l] < 0 && dfs(l)) ++m.size;
  }
  return m;
}

enum class Side { kLeft, kRight };

struct HallViolator {
  std::vector<int> set;           // S on the chosen side
  std::vector<int> neighborhood;  // N(S), |N(S)| < |S|
  Matching matching;              // maximum; saturates side \ S
};

// Vertices of `side` reachable by alternating paths from unmatched ones.
inline std::optional<HallViolator> hall_violator(const Bipartite& input, Side side) {
  Bipartite bip = side == Side::kLeft ? input : input.transposed();
  bip.normalize();
  Matching m = max_matching(bip);
  if (m.size == bip.left) return std::nullopt;
  std::vector<bool> in_s(bip.left, false), in_n(bip.right, false);
  std::vector<int> stack;
  for (int l = 0; l < bip.left; ++l)
    if (m.mate_left[l] < 0) {
      in_s[l] = true;
      stack.push_back(l);
    }
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r : bip.adj[l]) {
      if (in_n[r]) continue;
      in_n[r] = true;
      int l2 = m.mate_right[r];
      if (l2 >= 0 && !in_s[l2]) {
        in_s[l2] = true;
        stack.push_back(l2);
      }
    }
  }
  HallViolator h;
  for (int l = 0; l < bip.left; ++l)
    if (in_s[l]) h.set.push_back(l);
  for (int r = 0; r < bip.right; ++r)
    if (in_n[r]) h.neighborhood.push_back(r);
  if (side == Side::kRight) std::swap(m.mate_left, m.mate_right);
  h.matching = std::move(m);
  return h;
}

// Maximum matching in a general graph on 0..n-1 (Edmonds).
inline std::vector<int> general_max_matching(int n,
                                             const std::vector<std::pair<int, int>>& edges) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G g(n);
  for (auto [u, v] : edges)
    if (u != v) boost::add_edge(u, v, g);
  std::vector<boost::graph_traits<G>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  std::vector<int> out(n, -1);
  for (int v = 0; v < n; ++v)
    if (mate[v] != boost::graph_traits<G>::null_vertex()) out[v] = static_cast<int>(mate[v]);
  return out;
}

inline int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (int v : mate) c += v >= 0;
  return c / 2;
}

}  // namespace bk
