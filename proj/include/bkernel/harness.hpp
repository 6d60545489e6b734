// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.
//
// Randomized falsification of kernelizations: every kernel output is glued
// to a set of attachments and compared against the input by exact oracles.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bkernel/bkg_io.hpp"
#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/kernels/fvs.hpp"
#include "bkernel/kernels/paths.hpp"
#include "bkernel/kernels/vc_fvs.hpp"
#include "bkernel/kernels/vc_td.hpp"
#include "bkernel/kernels/vc_vc.hpp"
#include "bkernel/solvers/exact.hpp"
#include "bkernel/validate.hpp"
#include "json.hpp"

namespace bk {

enum class KernelKind { kVcVc, kVcFvs, kVcTd, kFvsFvs, kLcVc, kLpVc, kHamVc, kHamDeg2 };

inline const std::vector<KernelKind>& all_kernels() {
  static const std::vector<KernelKind> k = {KernelKind::kVcVc,  KernelKind::kVcFvs,
                                            KernelKind::kVcTd,  KernelKind::kFvsFvs,
                                            KernelKind::kLcVc,  KernelKind::kLpVc,
                                            KernelKind::kHamVc, KernelKind::kHamDeg2};
  return k;
}

inline const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::kVcVc: return "vc/vc";
    case KernelKind::kVcFvs: return "vc/fvs";
    case KernelKind::kVcTd: return "vc/td";
    case KernelKind::kFvsFvs: return "fvs/fvs";
    case KernelKind::kLcVc: return "lc/vc";
    case KernelKind::kLpVc: return "lp/vc";
    case KernelKind::kHamVc: return "hc-hp/vc";
    case KernelKind::kHamDeg2: return "hc-hp/deg2";
  }
  return "?";
}

inline std::optional<KernelKind> parse_kernel(const std::string& s) {
  for (KernelKind k : all_kernels())
    if (s == kernel_name(k)) return k;
  return std::nullopt;
}

struct FuzzConfig {
  KernelKind kernel = KernelKind::kVcVc;
  std::uint64_t seed = 1;
  int instances = 500;
  int max_n = 14;
  int max_b = 4;
  int max_k = 3;
  int max_fresh = 6;
  std::vector<double> densities = {0.2, 0.5, 0.8};
  // Extra sparse density for instances only; sparse hubs leave room for
  // the conflict structures of the forest kernels.
  std::vector<double> instance_densities = {0.1, 0.2, 0.5, 0.8};
  int attachments = 20;
  bool exhaustive_small = true;  // all attachments when |B| <= 2, t <= 2
  std::vector<int> td_depths = {2, 3};
  int workers = 1;
  Mutation mutation = Mutation::kNone;
  bool stop_at_first_failure = false;
};

// Path-type oracles are exponential in n with a large base; their
// instances are kept a little smaller.
inline FuzzConfig effective(FuzzConfig c) {
  if (c.kernel == KernelKind::kLcVc || c.kernel == KernelKind::kLpVc ||
      c.kernel == KernelKind::kHamVc || c.kernel == KernelKind::kHamDeg2) {
    c.max_n = std::min(c.max_n, 12);
    c.max_fresh = std::min(c.max_fresh, 4);
  }
  return c;
}

inline OracleOptions harness_oracle_options() {
  OracleOptions o;
  o.cap = 22;
  return o;
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(stream)};
    eng_.seed(seq);
  }
  // Uniform in [lo, hi].
  int range(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[range(0, static_cast<int>(v.size()) - 1)];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[range(0, i)]);
  }

 private:
  std::mt19937_64 eng_;
};

inline Problem instance_problem(KernelKind k, int index) {
  switch (k) {
    case KernelKind::kVcVc:
    case KernelKind::kVcFvs:
    case KernelKind::kVcTd: return Problem::kVc;
    case KernelKind::kFvsFvs: return Problem::kFvs;
    case KernelKind::kLcVc: return Problem::kLc;
    case KernelKind::kLpVc: return Problem::kLp;
    case KernelKind::kHamVc:
    case KernelKind::kHamDeg2: return index % 2 == 0 ? Problem::kHc : Problem::kHp;
  }
  return Problem::kVc;
}

inline TargetClass instance_class(const FuzzConfig& cfg, int index) {
  switch (cfg.kernel) {
    case KernelKind::kVcFvs:
    case KernelKind::kFvsFvs: return TargetClass::forest();
    case KernelKind::kVcTd:
      return TargetClass::treedepth(cfg.td_depths[index % cfg.td_depths.size()]);
    case KernelKind::kHamDeg2: return TargetClass::none();
    default: return TargetClass::independent();
  }
}

inline void link(Graph& g, Vertex u, Vertex v, bool doubled) {
  if (doubled) g.set_multiplicity(u, v, 2);
  else g.add_edge(u, v);
}

inline BoundariedGraph gen_instance(const FuzzConfig& raw, int index) {
  const FuzzConfig cfg = effective(raw);
  Rng rng(cfg.seed, static_cast<std::uint64_t>(index), 1);
  const TargetClass cls = instance_class(cfg, index);
  const int n = rng.range(2, cfg.max_n);
  const int b = rng.range(0, std::min(cfg.max_b, n));
  const int k = rng.range(0, std::min(cfg.max_k, n - b));
  std::vector<Vertex> ids(n);
  for (int v = 0; v < n; ++v) ids[v] = v;
  rng.shuffle(ids);
  BoundariedGraph g;
  g.graph = Graph::with_vertices(n);
  g.boundary = VertexSet(ids.begin(), ids.begin() + b);
  // The modulator: k vertices outside B plus some boundary vertices.
  VertexSet x(ids.begin() + b, ids.begin() + b + k);
  for (int i = 0; i < b; ++i)
    if (rng.coin(0.3)) x.insert(ids[i]);
  std::vector<Vertex> body;
  for (Vertex v : ids)
    if (!x.count(v)) body.push_back(v);
  const double p = rng.pick(cfg.instance_densities);
  const bool multi = cfg.kernel == KernelKind::kFvsFvs;

  switch (cls.kind) {
    case TargetClass::Kind::kForest: {
      // Random recursive trees, or caterpillars grown mostly along a spine.
      const bool spine = rng.coin(0.5);
      for (size_t i = 1; i < body.size(); ++i) {
        if (!rng.coin(spine ? 0.9 : 0.75)) continue;
        int par = spine && rng.coin(0.6) ? static_cast<int>(i) - 1
                                         : rng.range(0, static_cast<int>(i) - 1);
        g.graph.add_edge(body[i], body[par]);
      }
      break;
    }
    case TargetClass::Kind::kTreedepth: {
      // Random rooted forest of height <= d, then edges along ancestor chains.
      std::vector<int> depth(body.size(), 1);
      for (size_t i = 0; i < body.size(); ++i) {
        std::vector<int> cand;
        for (size_t j = 0; j < i; ++j)
          if (depth[j] < cls.depth) cand.push_back(static_cast<int>(j));
        if (cand.empty() || rng.coin(0.25)) continue;
        int par = rng.pick(cand);
        depth[i] = depth[par] + 1;
        g.td_parent[body[i]] = body[par];
        if (rng.coin(0.85)) g.graph.add_edge(body[i], body[par]);
        for (auto it = g.td_parent.find(body[par]); it != g.td_parent.end();
             it = g.td_parent.find(it->second))
          if (rng.coin(0.4)) g.graph.add_edge(body[i], it->second);
      }
      if (rng.coin(0.5)) g.td_parent.clear();
      break;
    }
    case TargetClass::Kind::kNone: {
      // Disjoint paths and cycles.
      size_t i = 0;
      while (i < body.size()) {
        size_t len = static_cast<size_t>(rng.range(1, static_cast<int>(body.size() - i)));
        for (size_t t = i + 1; t < i + len; ++t) g.graph.add_edge(body[t - 1], body[t]);
        if (len >= 3 && rng.coin(0.5)) g.graph.add_edge(body[i], body[i + len - 1]);
        i += len;
      }
      break;
    }
    default: break;
  }

  const std::vector<Vertex> hub(x.begin(), x.end());
  for (size_t i = 0; i < hub.size(); ++i) {
    for (size_t j = i + 1; j < hub.size(); ++j)
      if (rng.coin(p)) link(g.graph, hub[i], hub[j], multi && rng.coin(0.15));
    if (multi && rng.coin(0.1)) g.graph.add_edge(hub[i], hub[i]);
    for (Vertex v : body) {
      // Keep most degree-2 vertices at degree 2 for the degree parameter.
      if (cls.kind == TargetClass::Kind::kNone && g.graph.degree(v) >= 2 && rng.coin(0.7))
        continue;
      if (rng.coin(p)) link(g.graph, hub[i], v, multi && rng.coin(0.1));
    }
  }
  if (cfg.kernel == KernelKind::kVcFvs && hub.size() >= 2 && rng.coin(0.4)) {
    // Plant a path t-u-v-w whose inner vertices see no hub vertex and whose
    // ends see two adjacent hub vertices, with pendant paths at u and v.
    std::vector<Vertex> free;
    for (Vertex v : body)
      if (!g.boundary.count(v)) free.push_back(v);
    if (free.size() >= 8) {
      std::vector<Vertex> q(free.end() - 8, free.end());
      for (Vertex v : q)
        for (Vertex w : g.graph.neighbors(v)) g.graph.remove_edge(v, w);
      const Vertex t = q[0], u = q[1], v = q[2], w = q[3];
      for (auto [a, c] : {std::pair{t, u}, {u, v}, {v, w}, {u, q[4]}, {v, q[5]}, {q[4], q[6]},
                          {q[5], q[7]}})
        g.graph.add_edge(a, c);
      // Prefer hub vertices on the boundary so attachments can reach them.
      std::vector<Vertex> ends = hub;
      std::stable_partition(ends.begin(), ends.end(),
                            [&](Vertex h) { return g.boundary.count(h) != 0; });
      const Vertex x1 = ends[0], x2 = ends[1];
      if (rng.coin(0.5))
        for (Vertex h : {x1, x2})
          for (Vertex o : g.graph.neighbors(h)) g.graph.remove_edge(h, o);
      g.graph.ensure_edge(x1, x2);
      g.graph.add_edge(t, x1);
      g.graph.add_edge(w, x2);
      for (int i = 4; i < 8; ++i) g.graph.add_edge(q[i], rng.pick(hub));
    }
  }
  if (cls.kind != TargetClass::Kind::kNone) {
    g.modulator = x;
    g.target = cls;
  }
  return g;
}

// Attachment number `index` for the boundary b: the empty graph, the
// clique on B, a star into B, a path through B, then random graphs.
inline BoundariedGraph gen_attachment(const VertexSet& b, const FuzzConfig& raw, int index,
                                      std::uint64_t instance = 0) {
  const FuzzConfig cfg = effective(raw);
  BoundariedGraph h;
  h.boundary = b;
  for (Vertex v : b) h.graph.add_vertex(v);
  std::vector<Vertex> bs(b.begin(), b.end());
  auto fresh = [&]() {
    Vertex v = h.graph.fresh_vertex();
    h.graph.add_vertex(v);
    return v;
  };
  switch (index) {
    case 0: return h;
    case 1:
      for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = i + 1; j < bs.size(); ++j) h.graph.add_edge(bs[i], bs[j]);
      return h;
    case 2: {
      Vertex c = fresh();
      for (Vertex v : bs) h.graph.add_edge(c, v);
      return h;
    }
    case 3: {
      Vertex prev = fresh();
      for (Vertex v : bs) {
        h.graph.add_edge(prev, v);
        prev = v;
      }
      h.graph.add_edge(prev, fresh());
      return h;
    }
    default: break;
  }
  Rng rng(cfg.seed, instance * 1000003ULL + static_cast<std::uint64_t>(index), 2);
  const int t = rng.range(0, cfg.max_fresh);
  for (int i = 0; i < t; ++i) fresh();
  const double p = rng.pick(cfg.densities);
  const bool multi = cfg.kernel == KernelKind::kFvsFvs;
  const std::vector<Vertex> all = h.graph.vertex_list();
  for (size_t i = 0; i < all.size(); ++i) {
    if (multi && rng.coin(0.05)) h.graph.add_edge(all[i], all[i]);
    for (size_t j = i + 1; j < all.size(); ++j)
      if (rng.coin(p)) link(h.graph, all[i], all[j], multi && rng.coin(0.15));
  }
  return h;
}

// Every simple graph on B plus 0..max_fresh fresh vertices.
inline std::vector<BoundariedGraph> exhaustive_attachments(const VertexSet& b, int max_fresh) {
  std::vector<BoundariedGraph> out;
  for (int t = 0; t <= max_fresh; ++t) {
    BoundariedGraph base;
    base.boundary = b;
    for (Vertex v : b) base.graph.add_vertex(v);
    for (int i = 0; i < t; ++i) base.graph.add_vertex(base.graph.fresh_vertex());
    const std::vector<Vertex> all = base.graph.vertex_list();
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) slots.push_back({all[i], all[j]});
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
      BoundariedGraph h = base;
      for (size_t s = 0; s < slots.size(); ++s)
        if (m >> s & 1) h.graph.add_edge(slots[s].first, slots[s].second);
      out.push_back(std::move(h));
    }
  }
  return out;
}

inline std::vector<BoundariedGraph> attachments_for(const VertexSet& b, const FuzzConfig& cfg,
                                                    int instance) {
  std::vector<BoundariedGraph> out;
  if (cfg.exhaustive_small && b.size() <= 2) out = exhaustive_attachments(b, 2);
  for (int i = 0; i < cfg.attachments; ++i)
    out.push_back(gen_attachment(b, cfg, i, static_cast<std::uint64_t>(instance)));
  return out;
}

inline KernelResult run_kernel(KernelKind k, const BoundariedGraph& g, Problem problem,
                               KernelOptions opts = {}) {
  switch (k) {
    case KernelKind::kVcVc: return kernelize_vc_vc(g, opts);
    case KernelKind::kVcFvs: return kernelize_vc_fvs(g, opts);
    case KernelKind::kVcTd: return kernelize_vc_td(g, g.target.depth, opts);
    case KernelKind::kFvsFvs: return kernelize_fvs_fvs(g, opts);
    case KernelKind::kLcVc: return kernelize_lc_vc(g, opts);
    case KernelKind::kLpVc: return kernelize_lp_vc(g, opts);
    case KernelKind::kHamVc: return kernelize_hc_hp_vc(g, problem, opts);
    case KernelKind::kHamDeg2: return kernelize_hc_hp_deg2(g, problem, opts);
  }
  throw PreconditionError("run_kernel: unknown kernel");
}

struct EquivalenceVerdict {
  int instance = -1;
  bool pass = true;
  int attachment_index = -1;
  std::string attachment;  // BKG text
  std::string opt_original;
  std::string opt_reduced;
  std::optional<long long> delta;
  std::string minimized;  // BKG text of the shrunk attachment
  int attachments_checked = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["pass"] = pass;
    j["attachments"] = attachments_checked;
    if (!pass) {
      j["attachment_index"] = attachment_index;
      j["attachment"] = attachment;
      j["opt_original"] = opt_original;
      j["opt_reduced"] = opt_reduced;
      j["delta"] = delta ? nlohmann::ordered_json(*delta) : nlohmann::ordered_json(nullptr);
      j["minimized"] = minimized;
    }
    return j;
  }
};

namespace detail {

inline bool mismatch(Problem p, const BoundariedGraph& g, const BoundariedGraph& reduced,
                     std::optional<long long> delta, const BoundariedGraph& h, OptValue* a,
                     OptValue* b) {
  const OracleOptions o = harness_oracle_options();
  OptValue x = opt_exact(p, glue(g, h), o);
  OptValue y = opt_exact(p, glue(reduced, h), o);
  if (a) *a = x;
  if (b) *b = y;
  if (is_optimization(p)) return !(x == y.plus(delta.value_or(0)));
  return !(x == y);
}

// Removes fresh vertices, then decrements edges, while the mismatch stays.
inline BoundariedGraph shrink_attachment(Problem p, const BoundariedGraph& g,
                                         const BoundariedGraph& reduced,
                                         std::optional<long long> delta, BoundariedGraph h) {
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : h.non_boundary()) {
      BoundariedGraph t = h;
      t.graph.remove_vertex(v);
      if (mismatch(p, g, reduced, delta, t, nullptr, nullptr)) {
        h = std::move(t);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (const Edge& e : h.graph.edges()) {
      BoundariedGraph t = h;
      t.graph.set_multiplicity(e.u, e.v, e.mult - 1);
      if (mismatch(p, g, reduced, delta, t, nullptr, nullptr)) {
        h = std::move(t);
        changed = true;
        break;
      }
    }
  }
  return h;
}

}  // namespace detail

inline EquivalenceVerdict check_equivalence(Problem p, const BoundariedGraph& g,
                                            const KernelResult& res,
                                            const std::vector<BoundariedGraph>& attachments,
                                            int instance = -1) {
  EquivalenceVerdict v;
  v.instance = instance;
  v.delta = res.delta;
  for (size_t i = 0; i < attachments.size(); ++i) {
    OptValue a = OptValue::finite(0), b = OptValue::finite(0);
    ++v.attachments_checked;
    if (!detail::mismatch(p, g, res.reduced, res.delta, attachments[i], &a, &b)) continue;
    v.pass = false;
    v.attachment_index = static_cast<int>(i);
    v.attachment = write_bkg(attachments[i]);
    v.opt_original = a.to_string();
    v.opt_reduced = b.to_string();
    v.minimized =
        write_bkg(detail::shrink_attachment(p, g, res.reduced, res.delta, attachments[i]));
    return v;
  }
  return v;
}

// Modulator size of the instance as the kernels see it.
inline int modulator_size(const BoundariedGraph& g) {
  return g.modulator ? static_cast<int>(set_minus(*g.modulator, g.boundary).size()) : 0;
}

// Empty when the output respects the kernel's size bound.
inline std::string size_violation(KernelKind k, const BoundariedGraph& in,
                                  const KernelResult& res, long long c = 30) {
  const long long b = static_cast<long long>(in.boundary.size());
  const long long bk = b + modulator_size(in);
  const long long lifted = static_cast<long long>(res.lifted_boundary.size());
  const long long n = res.reduced.graph.num_vertices();
  const long long outside =
      static_cast<long long>(set_minus(res.reduced.graph.vertices(), res.lifted_boundary).size());
  auto fail = [&](const std::string& what, long long got, long long bound) {
    return what + " " + std::to_string(got) + " exceeds " + std::to_string(bound);
  };
  switch (k) {
    case KernelKind::kVcVc:
      if (n > 2 * bk) return fail("vertex count", n, 2 * bk);
      break;
    case KernelKind::kLcVc:
      if (outside > lifted * lifted + 2) return fail("non-boundary count", outside, lifted * lifted + 2);
      break;
    case KernelKind::kLpVc: {
      // With nothing lifted one vertex has to stay: the empty graph has no
      // path at all, which no offset can account for.
      long long bound = lifted == 0 && in.graph.num_vertices() > 0 ? 1 : lifted * lifted + lifted;
      if (outside > bound) return fail("non-boundary count", outside, bound);
      break;
    }
    case KernelKind::kHamVc:
    case KernelKind::kHamDeg2: {
      long long bound = std::max(2 * lifted + 1, b + 2);
      if (n > bound) return fail("vertex count", n, bound);
      break;
    }
    case KernelKind::kVcFvs: {
      long long bound = 14 * (lifted * lifted + lifted * lifted * lifted);
      if (outside - static_cast<long long>(res.reduced.modulator
                                               ? set_minus(*res.reduced.modulator,
                                                           res.lifted_boundary)
                                                     .size()
                                               : 0) >
          bound)
        return fail("non-boundary count", outside, bound);
      break;
    }
    case KernelKind::kFvsFvs:
      if (n > c * bk * bk) return fail("vertex count", n, c * bk * bk);
      break;
    case KernelKind::kVcTd: {
      const int d = in.target.depth;
      long long bound = c;
      for (int i = 0; i < (1 << (d - 1)); ++i) bound *= bk;
      if (n > bound) return fail("vertex count", n, bound);
      break;
    }
  }
  return {};
}

// Structural fixpoint checks of the kernels that have them.
inline std::vector<std::string> fixpoint_violations(KernelKind k, const KernelResult& res) {
  std::vector<std::string> out;
  BoundariedGraph g = res.reduced;
  g.boundary = set_intersect(res.lifted_boundary, g.graph.vertices());
  if (k == KernelKind::kVcVc) {
    const VertexSet r = g.non_boundary();
    if (g.graph.induced(r).num_edges() == 0 &&
        2 * static_cast<long long>(r.size()) > g.graph.num_vertices())
      out.push_back("independent remainder larger than half the graph");
  } else if (k == KernelKind::kVcFvs) {
    VcFvsState s;
    s.g = g;
    if (res.reduced.modulator) s.leaves = set_minus(*res.reduced.modulator, g.boundary);
    const long long b = static_cast<long long>(g.boundary.size());
    const long long bound = b * b + b * (b - 1) / 2 * b;
    const long long active = active_conflicts(s);
    if (active > bound)
      out.push_back("active conflicts " + std::to_string(active) + " exceed " +
                    std::to_string(bound));
  } else if (k == KernelKind::kFvsFvs) {
    out = fvs_fixpoint_violations(g);
  }
  return out;
}

struct InstanceOutcome {
  EquivalenceVerdict verdict;
  std::string size_issue;
  std::vector<std::string> fixpoint_issues;
  KernelStats stats;
  std::string error;  // precondition or cap failure
};

inline InstanceOutcome run_instance(const FuzzConfig& cfg, int index) {
  InstanceOutcome o;
  o.verdict.instance = index;
  try {
    BoundariedGraph g = gen_instance(cfg, index);
    const Problem p = instance_problem(cfg.kernel, index);
    KernelResult res = run_kernel(cfg.kernel, g, p, KernelOptions{cfg.mutation});
    o.stats = res.stats;
    o.verdict = check_equivalence(p, g, res, attachments_for(g.boundary, cfg, index), index);
    o.size_issue = size_violation(cfg.kernel, g, res);
    o.fixpoint_issues = fixpoint_violations(cfg.kernel, res);
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

struct FuzzSummary {
  int instances = 0;
  long long attachments = 0;
  int failures = 0;
  int size_violations = 0;
  int fixpoint_violations = 0;
  int errors = 0;
  bool clean() const {
    return failures == 0 && size_violations == 0 && fixpoint_violations == 0 && errors == 0;
  }
};

inline nlohmann::ordered_json outcome_json(const FuzzConfig& cfg, const InstanceOutcome& o) {
  nlohmann::ordered_json j = o.verdict.to_json();
  j["kernel"] = kernel_name(cfg.kernel);
  j["n_in"] = o.stats.n_in;
  j["n_out"] = o.stats.n_out;
  if (!o.size_issue.empty()) j["size_violation"] = o.size_issue;
  if (!o.fixpoint_issues.empty()) j["fixpoint_violations"] = o.fixpoint_issues;
  if (!o.error.empty()) j["error"] = o.error;
  return j;
}

// Runs the campaign; outcomes are reported in instance order whatever the
// worker count.
inline FuzzSummary run_fuzz(const FuzzConfig& cfg,
                            const std::function<void(const InstanceOutcome&)>& sink = {}) {
  FuzzSummary sum;
  std::vector<std::optional<InstanceOutcome>> slots(cfg.instances);
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  int emitted = 0;
  auto flush = [&]() {
    while (emitted < cfg.instances && slots[emitted]) {
      const InstanceOutcome& o = *slots[emitted];
      ++sum.instances;
      sum.attachments += o.verdict.attachments_checked;
      sum.failures += !o.verdict.pass;
      sum.size_violations += !o.size_issue.empty();
      sum.fixpoint_violations += !o.fixpoint_issues.empty();
      sum.errors += !o.error.empty();
      if (sink) sink(o);
      slots[emitted].reset();
      ++emitted;
    }
  };
  auto work = [&]() {
    while (!stop) {
      int i = next++;
      if (i >= cfg.instances) return;
      InstanceOutcome o = run_instance(cfg, i);
      std::lock_guard<std::mutex> lock(mu);
      if (cfg.stop_at_first_failure && (!o.verdict.pass || !o.error.empty())) stop = true;
      slots[i] = std::move(o);
      flush();
    }
  };
  const int w = std::max(1, cfg.workers);
  if (w == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return sum;
}

}  // namespace bk
