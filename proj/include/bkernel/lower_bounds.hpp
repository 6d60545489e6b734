// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.
//
// Families of boundaried graphs that are pairwise not gluing-equivalent,
// with the attachments that tell them apart.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/solvers/exact.hpp"
#include "bkernel/solvers/opt_value.hpp"

namespace bk {

struct FamilySpec {
  std::string name;  // ce-cliques, mc-bipartite, tds-star, tds-tree, lc-deg2, lp-deg2, ds-subsets
  int i = 0;
  int j = 0;
  int q = 4;  // ds-subsets only; i and j are then member bitmasks over the subsets
};

struct Family {
  Problem problem = Problem::kVc;
  std::vector<BoundariedGraph> members;    // G^i, G^j
  std::vector<BoundariedGraph> witnesses;  // W1, W2
  std::string witness_note;
};

namespace family {

inline BoundariedGraph with_boundary(int b) {
  BoundariedGraph g;
  g.graph = Graph::with_vertices(b);
  for (int v = 0; v < b; ++v) g.boundary.insert(v);
  return g;
}

inline Vertex add(BoundariedGraph& g) {
  Vertex v = g.graph.fresh_vertex();
  g.graph.add_vertex(v);
  return v;
}

// Path through fresh vertices from `from` to `to` (either may be -1).
inline void path(BoundariedGraph& g, Vertex from, int inner, Vertex to) {
  Vertex prev = from;
  for (int t = 0; t < inner; ++t) {
    Vertex v = add(g);
    if (prev >= 0) g.graph.add_edge(prev, v);
    prev = v;
  }
  if (to >= 0 && prev >= 0) g.graph.add_edge(prev, to);
}

// K_{i+1} containing the boundary vertex 0.
inline BoundariedGraph ce_clique(int i) {
  BoundariedGraph g = with_boundary(1);
  for (int t = 0; t < i; ++t) add(g);
  for (Vertex a : g.graph.vertex_list())
    for (Vertex b : g.graph.vertex_list())
      if (a < b) g.graph.add_edge(a, b);
  return g;
}

// x = 0, y = 1, and i vertices adjacent to both.
inline BoundariedGraph mc_member(int i) {
  BoundariedGraph g = with_boundary(2);
  g.modulator = g.boundary;
  g.target = TargetClass::independent();
  for (int t = 0; t < i; ++t) {
    Vertex v = add(g);
    g.graph.add_edge(0, v);
    g.graph.add_edge(1, v);
  }
  return g;
}

// K_{h,h}; one side adjacent to x, the other to y.
inline BoundariedGraph mc_witness(int h) {
  BoundariedGraph g = with_boundary(2);
  std::vector<Vertex> u, w;
  for (int t = 0; t < h; ++t) u.push_back(add(g));
  for (int t = 0; t < h; ++t) w.push_back(add(g));
  for (Vertex a : u) {
    g.graph.add_edge(0, a);
    for (Vertex b : w) g.graph.add_edge(a, b);
  }
  for (Vertex b : w) g.graph.add_edge(1, b);
  return g;
}

// Star with centre x = 0 and i leaves.
inline BoundariedGraph tds_star(int i) {
  BoundariedGraph g = with_boundary(1);
  g.modulator = g.boundary;
  g.target = TargetClass::independent();
  for (int t = 0; t < i; ++t) g.graph.add_edge(0, add(g));
  return g;
}

// The star plus a vertex y adjacent to every leaf.
inline BoundariedGraph tds_tree(int i) {
  BoundariedGraph g = tds_star(i);
  g.modulator.reset();
  g.target = TargetClass::none();
  std::vector<Vertex> leaves = g.graph.neighbors(0);
  Vertex y = add(g);
  for (Vertex v : leaves) g.graph.add_edge(y, v);
  return g;
}

// Vertex r and triangles x-a_n-b_n, each a_n adjacent to r.
inline BoundariedGraph tds_witness(int h) {
  BoundariedGraph g = with_boundary(1);
  Vertex r = add(g);
  for (int t = 0; t < h; ++t) {
    Vertex a = add(g), b = add(g);
    g.graph.add_edge(a, b);
    g.graph.add_edge(0, a);
    g.graph.add_edge(0, b);
    g.graph.add_edge(a, r);
  }
  return g;
}

// B = {0,1,2,3}: 0-a-1 and 2-b_1-...-b_{i+1}-3.
inline BoundariedGraph lc_member(int i) {
  BoundariedGraph g = with_boundary(4);
  path(g, 0, 1, 1);
  path(g, 2, i + 1, 3);
  return g;
}

inline BoundariedGraph lc_witness(bool right) {
  BoundariedGraph g = with_boundary(4);
  if (right) path(g, 2, 1, 3);
  else path(g, 0, 1, 1);
  return g;
}

// B = {0,1,2}: 1-b_1-...-b_{i+1}-2.
inline BoundariedGraph lp_member(int i) {
  BoundariedGraph g = with_boundary(3);
  path(g, 1, i + 1, 2);
  return g;
}

// Path of h edges hanging from vertex 0.
inline BoundariedGraph lp_witness(int h) {
  BoundariedGraph g = with_boundary(3);
  path(g, 0, h, -1);
  return g;
}

// All floor(q/2)-subsets of {0..q-1} as bitmasks, ascending.
inline std::vector<std::uint32_t> ds_subsets(int q) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << q); ++m)
    if (std::popcount(m) == q / 2) out.push_back(m);
  return out;
}

// One vertex y_I per subset I selected by `mask`, adjacent to x_i for i in I.
inline BoundariedGraph ds_member(int q, std::uint64_t mask) {
  BoundariedGraph g = with_boundary(q);
  g.modulator = g.boundary;
  g.target = TargetClass::independent();
  const auto subsets = ds_subsets(q);
  for (size_t s = 0; s < subsets.size(); ++s) {
    if (!(mask >> s & 1)) continue;
    Vertex y = add(g);
    for (int i = 0; i < q; ++i)
      if (subsets[s] >> i & 1) g.graph.add_edge(i, y);
  }
  return g;
}

// A pendant vertex z_i at x_i for every i in P.
inline BoundariedGraph ds_witness(int q, std::uint32_t p) {
  BoundariedGraph g = with_boundary(q);
  for (int i = 0; i < q; ++i)
    if (p >> i & 1) g.graph.add_edge(i, add(g));
  return g;
}

}  // namespace family

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"ce-cliques", "mc-bipartite", "tds-star",
                                                 "tds-tree",   "lc-deg2",      "lp-deg2",
                                                 "ds-subsets"};
  return names;
}

inline Family gen_family(const FamilySpec& s) {
  using namespace family;
  auto bad = [&](const std::string& why) {
    return PreconditionError("gen_family " + s.name + ": " + why);
  };
  if (s.i < 0 || s.j < 0) throw bad("indices must be non-negative");
  if (s.i == s.j) throw bad("indices must differ");
  const int hi = std::max(s.i, s.j);
  Family f;
  if (s.name == "ce-cliques") {
    f.problem = Problem::kCe;
    f.members = {ce_clique(s.i), ce_clique(s.j)};
    f.witnesses = {ce_clique(0), ce_clique(hi + 1)};
    f.witness_note = "G^0 and G^h with h = max(i,j) + 1";
  } else if (s.name == "mc-bipartite") {
    f.problem = Problem::kMc;
    f.members = {mc_member(s.i), mc_member(s.j)};
    f.witnesses = {mc_witness(0), mc_witness(hi + 1)};
    f.witness_note = "H^0 and H^h with h = max(i,j) + 1";
  } else if (s.name == "tds-star") {
    if (std::min(s.i, s.j) < 1) throw bad("indices must be at least 1");
    f.problem = Problem::kTds;
    f.members = {tds_star(s.i), tds_star(s.j)};
    f.witnesses = {tds_witness(1), tds_witness(hi + 1)};
    f.witness_note = "H^1 and H^h with h = max(i,j) + 1";
  } else if (s.name == "tds-tree") {
    if (std::min(s.i, s.j) < 2) throw bad("indices must be at least 2");
    f.problem = Problem::kTds;
    f.members = {tds_tree(s.i), tds_tree(s.j)};
    f.witnesses = {tds_witness(1), tds_witness(hi + 2)};
    f.witness_note = "H^1 and H^h with h = max(i,j) + 2";
  } else if (s.name == "lc-deg2") {
    f.problem = Problem::kLc;
    f.members = {lc_member(s.i), lc_member(s.j)};
    f.witnesses = {lc_witness(false), lc_witness(true)};
    f.witness_note = "L and R";
  } else if (s.name == "lp-deg2") {
    f.problem = Problem::kLp;
    f.members = {lp_member(s.i), lp_member(s.j)};
    f.witnesses = {lp_witness(0), lp_witness(hi + 3)};
    f.witness_note = "H^0 and H^h with h = max(i,j) + 3";
  } else if (s.name == "ds-subsets") {
    if (s.q < 1 || s.q > 6) throw bad("q must lie in 1..6");
    const auto subsets = ds_subsets(s.q);
    const std::uint64_t limit = std::uint64_t{1} << subsets.size();
    if (static_cast<std::uint64_t>(hi) >= limit) throw bad("member mask out of range");
    f.problem = Problem::kDs;
    f.members = {ds_member(s.q, s.i), ds_member(s.q, s.j)};
    // I in one member but not the other; the witness leaves exactly I bare.
    std::uint64_t diff = static_cast<std::uint64_t>(s.i ^ s.j);
    std::uint32_t subset = subsets[std::countr_zero(diff)];
    const std::uint32_t all = (1u << s.q) - 1;
    f.witnesses = {ds_witness(s.q, all), ds_witness(s.q, all & ~subset)};
    f.witness_note = "H^[q] and H^([q] \\ I) for a subset I in exactly one member";
  } else {
    throw bad("unknown family");
  }
  return f;
}

struct ClosedFormCheck {
  std::string what;
  std::string expected;
  OptValue got = OptValue::finite(0);
  bool ok = false;
};

struct SeparationReport {
  FamilySpec spec;
  std::string witness_note;
  // OPT(G^i + W1), OPT(G^j + W1), OPT(G^i + W2), OPT(G^j + W2)
  std::vector<OptValue> values;
  bool separated = false;
  std::vector<ClosedFormCheck> checks;
  bool closed_forms_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  }
};

inline OracleOptions family_oracle_options() {
  OracleOptions o;
  o.cap = 24;
  o.ce_cap = 14;
  return o;
}

inline OptValue glued_opt(Problem p, const BoundariedGraph& g, const BoundariedGraph& h) {
  return opt_exact(p, glue(g, h), family_oracle_options());
}

inline SeparationReport verify_separation(const FamilySpec& spec) {
  Family f = gen_family(spec);
  SeparationReport r;
  r.spec = spec;
  r.witness_note = f.witness_note;
  for (int w = 0; w < 2; ++w)
    for (int m = 0; m < 2; ++m) r.values.push_back(glued_opt(f.problem, f.members[m], f.witnesses[w]));
  bool finite = std::all_of(r.values.begin(), r.values.end(),
                            [](const OptValue& v) { return v.is_finite(); });
  r.separated = finite && r.values[0].value() - r.values[1].value() !=
                              r.values[2].value() - r.values[3].value();

  auto check = [&](const std::string& what, int slot, const std::string& op, long long want) {
    const OptValue& got = r.values[slot];
    bool ok = got.is_finite() &&
              (op == "=" ? got.value() == want : op == "<=" ? got.value() <= want
                                                            : got.value() > want);
    r.checks.push_back({what, op + " " + std::to_string(want), got, ok});
  };
  const int i = spec.i, j = spec.j, hi = std::max(i, j);
  const int lo_slot = i < j ? 2 : 3, hi_slot = i < j ? 3 : 2;
  const int lo = std::min(i, j);
  const std::string n = spec.name;
  if (n == "ce-cliques") {
    check("OPT(G^i + G^0)", 0, "=", 0);
    check("OPT(G^j + G^0)", 1, "=", 0);
    check("OPT(G^i + G^h)", 2, "=", i);
    check("OPT(G^j + G^h)", 3, "=", j);
  } else if (n == "mc-bipartite") {
    const long long h = hi + 1;
    check("OPT(G^i + H^0)", 0, "=", 2 * i);
    check("OPT(G^j + H^0)", 1, "=", 2 * j);
    check("OPT(G^i + H^h)", 2, "=", h * h + 2 * h + i);
    check("OPT(G^j + H^h)", 3, "=", h * h + 2 * h + j);
  } else if (n == "tds-star" || n == "tds-tree") {
    const int base = n == "tds-star" ? 1 : 2;
    check("OPT(G^i + H^1)", 0, "=", base);
    check("OPT(G^j + H^1)", 1, "=", base);
    check("OPT(G^min + H^h)", lo_slot, "<=", lo + base);
    check("OPT(G^max + H^h)", hi_slot, ">", hi + base - 1);
  } else if (n == "lc-deg2") {
    check("OPT(G^i + L)", 0, "=", 4);
    check("OPT(G^j + L)", 1, "=", 4);
    check("OPT(G^i + R)", 2, "=", i + 4);
    check("OPT(G^j + R)", 3, "=", j + 4);
  } else if (n == "lp-deg2") {
    check("OPT(G^i + H^0)", 0, "=", i + 2);
    check("OPT(G^j + H^0)", 1, "=", j + 2);
    check("OPT(G^i + H^h)", 2, "=", hi + 3);
    check("OPT(G^j + H^h)", 3, "=", hi + 3);
  } else if (n == "ds-subsets") {
    const int q = spec.q, bound = (q + 1) / 2 + 1;
    check("OPT(G^I + H^[q])", 0, "=", q);
    check("OPT(G^J + H^[q])", 1, "=", q);
    // The member holding the bare subset has the cheap solution.
    const bool i_has = ((spec.i ^ spec.j) & spec.i) >> std::countr_zero(
                           static_cast<std::uint64_t>(spec.i ^ spec.j)) & 1;
    check("OPT(member with I + H^([q] \\ I))", i_has ? 2 : 3, "<=", bound);
    // With |I| = 1 the bare boundary vertex dominates itself, so the strict
    // gap only exists from q = 4 on.
    if (q / 2 >= 2) check("OPT(member without I + H^([q] \\ I))", i_has ? 3 : 2, ">", bound);
  }
  return r;
}

struct DsIndexReport {
  int q = 0;
  int members = 0;
  long long pairs = 0;
  long long separated_by_pendants = 0;  // by the H^P family alone
  long long separated_other = 0;        // needed a small exhaustive attachment
  long long unseparated = 0;
  bool all_full_witness_q = true;  // OPT(G + H^[q]) = q for every member
  bool bounds_ok = true;           // q >= 4: the <= / > gap for every ordered pair
  bool all_separated() const { return unseparated == 0; }
};

// Attachments on the boundary {0..q-1} plus up to one fresh vertex, every
// edge set.
inline std::vector<BoundariedGraph> small_attachments(int q) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a <= q; ++a)
    for (int b = a + 1; b <= q; ++b) slots.push_back({a, b});
  std::vector<BoundariedGraph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    BoundariedGraph h = family::with_boundary(q);
    h.graph.add_vertex(q);
    for (size_t s = 0; s < slots.size(); ++s)
      if (m >> s & 1) h.graph.add_edge(slots[s].first, slots[s].second);
    out.push_back(std::move(h));
  }
  return out;
}

inline DsIndexReport demonstrate_ds_index(int q) {
  if (q < 1 || q > 4) throw PreconditionError("demonstrate_ds_index: q must lie in 1..4");
  DsIndexReport rep;
  rep.q = q;
  const auto subsets = family::ds_subsets(q);
  const int t = static_cast<int>(subsets.size());
  const int count = 1 << t;
  rep.members = count;
  const std::uint32_t all = (1u << q) - 1;
  std::vector<BoundariedGraph> members;
  for (int m = 0; m < count; ++m) members.push_back(family::ds_member(q, m));
  std::vector<std::vector<long long>> opt(count, std::vector<long long>(all + 1));
  for (int m = 0; m < count; ++m)
    for (std::uint32_t p = 0; p <= all; ++p)
      opt[m][p] = glued_opt(Problem::kDs, members[m], family::ds_witness(q, p)).value();
  for (int m = 0; m < count; ++m)
    if (opt[m][all] != q) rep.all_full_witness_q = false;

  const int bound = (q + 1) / 2 + 1;
  std::optional<std::vector<BoundariedGraph>> extra;
  std::map<std::pair<int, int>, long long> extra_opt;
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      ++rep.pairs;
      if (q / 2 >= 2) {
        for (int s = 0; s < t; ++s) {
          bool in_a = a >> s & 1, in_b = b >> s & 1;
          if (in_a == in_b) continue;
          const std::uint32_t p = all & ~subsets[s];
          const int with = in_a ? a : b, without = in_a ? b : a;
          if (!(opt[with][p] <= bound && opt[without][p] > bound)) rep.bounds_ok = false;
        }
      }
      bool sep = false;
      for (std::uint32_t p = 0; p <= all && !sep; ++p)
        sep = opt[a][p] - opt[b][p] != opt[a][all] - opt[b][all];
      if (sep) {
        ++rep.separated_by_pendants;
        continue;
      }
      if (!extra) extra = small_attachments(q);
      auto value = [&](int m, int h) {
        auto key = std::make_pair(m, h);
        auto it = extra_opt.find(key);
        if (it != extra_opt.end()) return it->second;
        long long v = glued_opt(Problem::kDs, members[m], (*extra)[h]).value();
        extra_opt[key] = v;
        return v;
      };
      const long long base = value(a, 0) - value(b, 0);
      for (int h = 1; h < static_cast<int>(extra->size()) && !sep; ++h)
        sep = value(a, h) - value(b, h) != base;
      if (sep) ++rep.separated_other;
      else ++rep.unseparated;
    }
  return rep;
}

}  // namespace bk
