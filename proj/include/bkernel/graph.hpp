// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bk {

using Vertex = int;
using VertexSet = std::set<Vertex>;

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  int mult;
  bool operator==(const Edge&) const = default;
};

// Undirected multigraph. Multiplicities are stored per unordered pair; a loop
// is the pair (v, v). The type does not cap multiplicity so that the parser
// and validate() can report bad input; every mutator used by the kernels keeps
// it in {1, 2} (loops at 1).
class Graph {
 public:
  Graph() = default;

  static Graph with_vertices(int n) {
    Graph g;
    for (Vertex v = 0; v < n; ++v) g.add_vertex(v);
    return g;
  }

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  void add_vertex(Vertex v) {
    if (v < 0) throw PreconditionError("negative vertex id");
    adj_.try_emplace(v);
  }
  void remove_vertex(Vertex v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) return;
    for (const auto& [w, m] : it->second)
      if (w != v) adj_[w].erase(v);
    adj_.erase(it);
  }
  void remove_vertices(const VertexSet& s) {
    for (Vertex v : s) remove_vertex(v);
  }

  int multiplicity(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
  }
  bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  bool has_loop(Vertex v) const { return multiplicity(v, v) > 0; }

  // Raw setter; m == 0 removes the edge.
  void set_multiplicity(Vertex u, Vertex v, int m) {
    if (!has_vertex(u) || !has_vertex(v))
      throw PreconditionError("edge endpoint is not a vertex");
    if (m <= 0) {
      adj_[u].erase(v);
      adj_[v].erase(u);
      return;
    }
    adj_[u][v] = m;
    adj_[v][u] = m;
  }

  // Adds one copy of {u, v}; multiplicity saturates at 2, loops at 1.
  void add_edge(Vertex u, Vertex v) {
    int cap = (u == v) ? 1 : 2;
    set_multiplicity(u, v, std::min(cap, multiplicity(u, v) + 1));
  }
  // Ensures {u, v} is present with multiplicity at least 1.
  void ensure_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) set_multiplicity(u, v, 1);
  }
  void remove_edge(Vertex u, Vertex v) {
    if (has_vertex(u) && has_vertex(v)) set_multiplicity(u, v, 0);
  }

  VertexSet vertices() const {
    VertexSet s;
    for (const auto& [v, nb] : adj_) s.insert(s.end(), v);
    return s;
  }
  std::vector<Vertex> vertex_list() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
  }
  int num_vertices() const { return static_cast<int>(adj_.size()); }

  // Distinct neighbours excluding v itself.
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto it = adj_.find(v);
    if (it == adj_.end()) return out;
    for (const auto& [w, m] : it->second)
      if (w != v) out.push_back(w);
    return out;
  }
  const std::map<Vertex, int>& incident(Vertex v) const {
    static const std::map<Vertex, int> kEmpty;
    auto it = adj_.find(v);
    return it == adj_.end() ? kEmpty : it->second;
  }
  // Number of edge ends at v: a double edge counts 2, a loop counts 2.
  int degree(Vertex v) const {
    int d = 0;
    for (const auto& [w, m] : incident(v)) d += (w == v) ? 2 * m : m;
    return d;
  }
  int simple_degree(Vertex v) const {
    int d = 0;
    for (const auto& [w, m] : incident(v))
      if (w != v) ++d;
    return d;
  }

  // Edges with u <= v in ascending order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [u, nb] : adj_)
      for (auto it = nb.lower_bound(u); it != nb.end(); ++it)
        out.push_back({u, it->first, it->second});
    return out;
  }
  int num_edges() const {
    int c = 0;
    for (const auto& [u, nb] : adj_)
      for (auto it = nb.lower_bound(u); it != nb.end(); ++it) ++c;
    return c;
  }
  bool is_simple() const {
    for (const auto& [u, nb] : adj_)
      for (const auto& [w, m] : nb)
        if (w == u || m != 1) return false;
    return true;
  }

  Vertex fresh_vertex() const {
    return adj_.empty() ? 0 : adj_.rbegin()->first + 1;
  }

  Graph induced(const VertexSet& keep) const {
    Graph h;
    for (Vertex v : keep)
      if (has_vertex(v)) h.add_vertex(v);
    for (const auto& [u, nb] : adj_) {
      if (!keep.count(u)) continue;
      for (auto it = nb.lower_bound(u); it != nb.end(); ++it)
        if (keep.count(it->first)) h.set_multiplicity(u, it->first, it->second);
    }
    return h;
  }
  Graph without(const VertexSet& drop) const {
    Graph h = *this;
    h.remove_vertices(drop);
    return h;
  }

  // Connected components as vertex sets, ordered by their smallest vertex.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (const auto& [s, nb] : adj_) {
      if (seen.count(s)) continue;
      VertexSet comp;
      std::vector<Vertex> stack{s};
      seen.insert(s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        comp.insert(v);
        for (const auto& [w, m] : adj_.at(v))
          if (seen.insert(w).second) stack.push_back(w);
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::map<Vertex, std::map<Vertex, int>> adj_;
};

inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!s.count(w)) out.insert(w);
  return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct TargetClass {
  enum class Kind { kNone, kIndependent, kForest, kTreedepth, kVertexCover };
  Kind kind = Kind::kNone;
  int depth = 0;  // only for kTreedepth

  static TargetClass none() { return {}; }
  static TargetClass independent() { return {Kind::kIndependent, 0}; }
  static TargetClass forest() { return {Kind::kForest, 0}; }
  static TargetClass treedepth(int d) { return {Kind::kTreedepth, d}; }
  static TargetClass vertex_cover() { return {Kind::kVertexCover, 0}; }

  bool operator==(const TargetClass&) const = default;
};

struct BoundariedGraph {
  Graph graph;
  VertexSet boundary;
  std::optional<VertexSet> modulator;
  TargetClass target;
  // Optional treedepth decomposition of graph - modulator (child -> parent).
  std::map<Vertex, Vertex> td_parent;

  VertexSet non_boundary() const { return set_minus(graph.vertices(), boundary); }
  bool operator==(const BoundariedGraph&) const = default;
};

}  // namespace bk
