// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <vector>

namespace bk {

struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;

  explicit Digraph(int size = 0) : n(size), out(size) {}
  void add_arc(int u, int v) { out[u].push_back(v); }
};

// Tarjan's algorithm, iterative. Returns the component index of each vertex;
// components are numbered in reverse topological order (sinks first).
inline std::vector<int> strongly_connected_components(const Digraph& d, int* count) {
  std::vector<int> index(d.n, -1), low(d.n, 0), comp(d.n, -1), stack;
  std::vector<bool> on_stack(d.n, false);
  std::vector<std::pair<int, size_t>> call;
  int next_index = 0, next_comp = 0;
  for (int s = 0; s < d.n; ++s) {
    if (index[s] >= 0) continue;
    call.push_back({s, 0});
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0 && index[v] < 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (i < d.out[v].size()) {
        int w = d.out[v][i++];
        if (index[w] < 0) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  if (count) *count = next_comp;
  return comp;
}

// SCCs without arcs leaving them, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> tail_sccs(const Digraph& d) {
  int count = 0;
  auto comp = strongly_connected_components(d, &count);
  std::vector<bool> has_out(count, false);
  for (int v = 0; v < d.n; ++v)
    for (int w : d.out[v])
      if (comp[v] != comp[w]) has_out[comp[v]] = true;
  std::vector<std::vector<int>> groups(count);
  for (int v = 0; v < d.n; ++v) groups[comp[v]].push_back(v);
  std::vector<std::vector<int>> out;
  for (int c = 0; c < count; ++c)
    if (!has_out[c]) out.push_back(groups[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bk
