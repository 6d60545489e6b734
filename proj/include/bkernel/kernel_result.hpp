// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bkernel/graph.hpp"

namespace bk {

// Rule name -> application count, in order of first application.
class RuleTrace {
 public:
  void add(const std::string& rule, int count = 1) {
    if (count <= 0) return;
    for (auto& [name, c] : entries_)
      if (name == rule) {
        c += count;
        return;
      }
    entries_.push_back({rule, count});
  }
  void merge(const RuleTrace& other) {
    for (const auto& [name, c] : other.entries_) add(name, c);
  }
  int count(const std::string& rule) const {
    for (const auto& [name, c] : entries_)
      if (name == rule) return c;
    return 0;
  }
  int total() const {
    int t = 0;
    for (const auto& [name, c] : entries_) t += c;
    return t;
  }
  const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, int>> entries_;
};

struct KernelStats {
  int n_in = 0;
  int m_in = 0;
  int n_out = 0;
  int m_out = 0;
};

struct KernelResult {
  BoundariedGraph reduced;
  std::optional<long long> delta;  // absent for decision problems
  RuleTrace trace;
  KernelStats stats;
  // Boundary after lifting the modulator (the B' used by the size bounds).
  VertexSet lifted_boundary;
};

// Deliberate defects used to check that the equivalence harness notices
// broken kernels. Never set outside tests.
enum class Mutation {
  kNone,
  kVcWrongDelta,
  kVcDropBoundary,
  kVcFvsWrongDelta,
  kConf1SkipRewire,
  kConf1SkipEdge,
  kConf2SkipRewire,
  kLcDropK,
  kFvsBypassBoundaryPair,
  kLpWrongDelta,
  kVcTdDropBoundary,
};

struct KernelOptions {
  Mutation mutation = Mutation::kNone;
};

inline KernelStats make_stats(const Graph& in, const Graph& out) {
  return {in.num_vertices(), in.num_edges(), out.num_vertices(), out.num_edges()};
}

// Removes the boundary vertex of largest degree (smallest id on ties).
inline void drop_boundary_vertex(BoundariedGraph& g) {
  Vertex pick = -1;
  int best = -1;
  for (Vertex b : g.boundary)
    if (g.graph.has_vertex(b) && g.graph.degree(b) > best) best = g.graph.degree(b), pick = b;
  if (pick >= 0) g.graph.remove_vertex(pick);
}

}  // namespace bk
