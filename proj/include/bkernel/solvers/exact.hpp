// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <algorithm>
#include <climits>
#include <vector>

#include "bkernel/graph.hpp"
#include "bkernel/solvers/dense.hpp"
#include "bkernel/solvers/opt_value.hpp"

namespace bk {

struct OracleOptions {
  int cap = 18;
  int ce_cap = 14;
};

namespace oracle {

// Maximum independent set inside p (looped vertices must be excluded by the
// caller).
inline int mis(const DenseGraph& d, Mask p) {
  if (!p) return 0;
  int vmin = -1, dmin = INT_MAX, vmax = -1, dmax = -1;
  for (Mask m = p; m; m &= m - 1) {
    int v = lowest(m);
    int deg = popcount(d.adj[v] & p);
    if (deg < dmin) dmin = deg, vmin = v;
    if (deg > dmax) dmax = deg, vmax = v;
  }
  if (dmin <= 1) return 1 + mis(d, p & ~(bit(vmin) | d.adj[vmin]));
  int without = mis(d, p & ~bit(vmax));
  int with = 1 + mis(d, p & ~(bit(vmax) | d.adj[vmax]));
  return std::max(without, with);
}

inline int vertex_cover(const DenseGraph& d) {
  return d.n - mis(d, d.all() & ~d.loops);
}

// Vertices of a shortest cycle in d[m]; m has minimum degree >= 2 and no loops.
inline Mask shortest_cycle(const DenseGraph& d, Mask m) {
  for (Mask a = m; a; a &= a - 1) {
    int v = lowest(a);
    if (d.dbl[v] & m) return bit(v) | bit(lowest(d.dbl[v] & m));
  }
  Mask best = 0;
  int best_len = INT_MAX;
  std::vector<int> dist(d.n), parent(d.n);
  for (Mask a = m; a; a &= a - 1) {
    int r = lowest(a);
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::vector<int> queue{r};
    bool done = false;
    for (size_t qi = 0; qi < queue.size() && !done; ++qi) {
      int u = queue[qi];
      if (2 * dist[u] + 1 >= best_len) break;
      for (Mask nb = d.adj[u] & m; nb; nb &= nb - 1) {
        int w = lowest(nb);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (len < best_len) {
            best_len = len;
            best = 0;
            for (int x = u; x >= 0; x = parent[x]) best |= bit(x);
            for (int x = w; x >= 0; x = parent[x]) best |= bit(x);
          }
          done = true;
          break;
        }
      }
    }
  }
  return best;
}

// Can at most k vertices of m, none from `keep`, be deleted to leave a forest?
inline bool fvs_decide(const DenseGraph& d, Mask m, Mask keep, int k) {
  for (bool changed = true; changed;) {
    changed = false;
    Mask l = d.loops & m;
    if (l) {
      if (l & keep) return false;
      k -= popcount(l);
      m &= ~l;
      if (k < 0) return false;
      changed = true;
    }
    for (Mask a = m; a; a &= a - 1) {
      int v = lowest(a);
      if (popcount(d.adj[v] & m) + popcount(d.dbl[v] & m) <= 1) {
        m &= ~bit(v);
        changed = true;
      }
    }
  }
  if (!m) return true;
  if (k == 0) return false;
  Mask cycle = shortest_cycle(d, m);
  Mask cand = cycle & ~keep;
  // Deleting the i-th candidate; earlier candidates are kept in this branch.
  for (Mask a = cand; a; a &= a - 1) {
    int v = lowest(a);
    if (fvs_decide(d, m & ~bit(v), keep, k - 1)) return true;
    keep |= bit(v);
  }
  return false;
}

inline int feedback_vertex_set(const DenseGraph& d) {
  for (int k = 0;; ++k)
    if (fvs_decide(d, d.all(), 0, k)) return k;
}

// Largest induced tree: grows trees from each root over higher-indexed
// vertices only, so each tree is enumerated from its smallest vertex.
inline void grow_tree(const DenseGraph& d, Mask tree, Mask banned, int& best) {
  best = std::max(best, popcount(tree));
  Mask frontier = 0;
  for (Mask a = tree; a; a &= a - 1) frontier |= d.adj[lowest(a)];
  frontier &= ~tree & ~banned;
  // Upper bound: everything reachable from the tree through unbanned vertices.
  Mask reach = tree, grow = frontier;
  while (grow) {
    reach |= grow;
    Mask next = 0;
    for (Mask a = grow; a; a &= a - 1) next |= d.adj[lowest(a)];
    grow = next & ~reach & ~banned;
  }
  if (popcount(reach) <= best) return;
  for (Mask a = frontier; a; a &= a - 1) {
    int v = lowest(a);
    if (popcount(d.adj[v] & tree) == 1) {
      grow_tree(d, tree | bit(v), banned, best);
    }
    banned |= bit(v);
  }
}

inline OptValue tree_deletion_set(const DenseGraph& d) {
  if (d.n == 0) return OptValue::plus_infinity();
  int best = 0;
  for (int r = 0; r < d.n; ++r) grow_tree(d, bit(r), bit(r) - 1, best);
  return OptValue::finite(d.n - best);
}

inline bool ds_decide(const DenseGraph& d, Mask dominated, int k, int maxdeg) {
  Mask todo = d.all() & ~dominated;
  if (!todo) return true;
  if (k == 0) return false;
  if (popcount(todo) > k * (maxdeg + 1)) return false;
  int u = -1, best = INT_MAX;
  for (Mask a = todo; a; a &= a - 1) {
    int v = lowest(a);
    int c = popcount(d.adj[v]) + 1;
    if (c < best) best = c, u = v;
  }
  for (Mask a = d.adj[u] | bit(u); a; a &= a - 1) {
    int w = lowest(a);
    if (ds_decide(d, dominated | d.adj[w] | bit(w), k - 1, maxdeg)) return true;
  }
  return false;
}

inline int dominating_set(const DenseGraph& d) {
  int maxdeg = 0;
  for (int v = 0; v < d.n; ++v) maxdeg = std::max(maxdeg, popcount(d.adj[v]));
  for (int k = 0;; ++k)
    if (ds_decide(d, 0, k, maxdeg)) return k;
}

struct PathTables {
  // ends[m]: endpoints of Hamiltonian paths of d[m] (any start).
  std::vector<std::uint32_t> ends;
  // cyc[m]: endpoints v of Hamiltonian paths of d[m] from lowest(m) to v.
  std::vector<std::uint32_t> cyc;
};

inline PathTables path_tables(const DenseGraph& d) {
  if (d.n > 26) throw CapExceeded("path DP limited to 26 vertices");
  const size_t size = size_t{1} << d.n;
  PathTables t;
  t.ends.assign(size, 0);
  t.cyc.assign(size, 0);
  for (size_t m = 1; m < size; ++m) {
    Mask mm = m;
    if ((mm & (mm - 1)) == 0) {
      t.ends[m] = static_cast<std::uint32_t>(mm);
      t.cyc[m] = static_cast<std::uint32_t>(mm);
      continue;
    }
    int s = lowest(mm);
    std::uint32_t e = 0, c = 0;
    for (Mask a = mm; a; a &= a - 1) {
      int v = lowest(a);
      Mask rest = mm & ~bit(v);
      if (d.adj[v] & t.ends[rest]) e |= 1u << v;
      if (v != s && (d.adj[v] & t.cyc[rest])) c |= 1u << v;
    }
    t.ends[m] = e;
    t.cyc[m] = c;
  }
  return t;
}

inline bool closes_cycle(const DenseGraph& d, const PathTables& t, Mask m) {
  return popcount(m) >= 3 && (t.cyc[m] & d.adj[lowest(m)]) != 0;
}

inline OptValue cluster_editing(const DenseGraph& d) {
  const int n = d.n;
  const size_t size = size_t{1} << n;
  std::vector<int> weight(size, 0);  // nonedges - edges inside the set
  int m_edges = induced_edges(d, d.all());
  for (size_t s = 1; s < size; ++s) {
    int k = popcount(s);
    weight[s] = k * (k - 1) / 2 - 2 * induced_edges(d, s);
  }
  std::vector<int> f(size, 0);
  for (size_t s = 1; s < size; ++s) {
    Mask low = bit(lowest(s));
    Mask rest = s & ~low;
    int best = INT_MAX;
    // Enumerate clusters C = low ∪ sub for sub ⊆ rest.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask c = sub | low;
      best = std::min(best, weight[c] + f[s & ~c]);
      if (sub == 0) break;
    }
    f[s] = best;
  }
  return OptValue::finite(m_edges + f[size - 1]);
}

inline bool cvd_decide(const DenseGraph& d, Mask m, int k) {
  for (Mask a = m; a; a &= a - 1) {
    int b = lowest(a);
    Mask nb = d.adj[b] & m;
    for (Mask x = nb; x; x &= x - 1) {
      int u = lowest(x);
      Mask far = nb & ~d.adj[u] & ~bit(u);
      if (!far) continue;
      if (k == 0) return false;
      int w = lowest(far);
      return cvd_decide(d, m & ~bit(u), k - 1) || cvd_decide(d, m & ~bit(b), k - 1) ||
             cvd_decide(d, m & ~bit(w), k - 1);
    }
  }
  return true;
}

inline int cluster_vertex_deletion(const DenseGraph& d) {
  for (int k = 0;; ++k)
    if (cvd_decide(d, d.all(), k)) return k;
}

inline int max_cut(const DenseGraph& d) {
  if (d.n <= 1) return 0;
  // Gray-code walk over sides of vertices 0..n-2; vertex n-1 stays on side 0.
  Mask side = 0;
  int cut = 0, best = 0;
  const std::uint64_t steps = std::uint64_t{1} << (d.n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    int v = std::countr_zero(i);
    Mask same = (side & bit(v)) ? side : ~side;
    int to_same = popcount(d.adj[v] & same & ~bit(v));
    int to_other = popcount(d.adj[v]) - to_same;
    cut += to_same - to_other;
    side ^= bit(v);
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace oracle

inline OptValue opt_exact(Problem p, const Graph& g, OracleOptions opts = {}) {
  const int cap = (p == Problem::kCe) ? opts.ce_cap : opts.cap;
  if (g.num_vertices() > cap)
    throw CapExceeded(std::string("opt_exact: ") + problem_name(p) + " on " +
                      std::to_string(g.num_vertices()) + " vertices exceeds cap " +
                      std::to_string(cap));
  DenseGraph d = to_dense(g);
  if (d.multigraph() && p != Problem::kFvs) {
    if (p != Problem::kHc && p != Problem::kHp)
      throw PreconditionError(std::string("opt_exact: ") + problem_name(p) +
                              " needs a simple graph");
    d.loops = 0;  // loops and multiplicities do not affect Hamiltonicity
    std::fill(d.dbl.begin(), d.dbl.end(), 0);
  }
  switch (p) {
    case Problem::kVc: return OptValue::finite(oracle::vertex_cover(d));
    case Problem::kFvs: return OptValue::finite(oracle::feedback_vertex_set(d));
    case Problem::kTds: return oracle::tree_deletion_set(d);
    case Problem::kDs: return OptValue::finite(oracle::dominating_set(d));
    case Problem::kCe: return oracle::cluster_editing(d);
    case Problem::kCvd: return OptValue::finite(oracle::cluster_vertex_deletion(d));
    case Problem::kMc: return OptValue::finite(oracle::max_cut(d));
    case Problem::kDeg2Mod: {
      int c = 0;
      for (int v = 0; v < d.n; ++v) c += popcount(d.adj[v]) != 2;
      return OptValue::finite(c);
    }
    case Problem::kLc:
    case Problem::kLp:
    case Problem::kHc:
    case Problem::kHp: {
      if (d.n == 0) {
        if (p == Problem::kHc || p == Problem::kHp) return OptValue::yes_no(false);
        return OptValue::minus_infinity();
      }
      auto t = oracle::path_tables(d);
      const Mask all = d.all();
      if (p == Problem::kHp) return OptValue::yes_no(t.ends[all] != 0);
      if (p == Problem::kHc) return OptValue::yes_no(oracle::closes_cycle(d, t, all));
      int best = -1;
      for (Mask m = 1; m <= all; ++m) {
        int k = popcount(m);
        if (k <= best) continue;
        if (p == Problem::kLp ? t.ends[m] != 0 : oracle::closes_cycle(d, t, m)) best = k;
      }
      if (best < 0) return OptValue::minus_infinity();
      return OptValue::finite(p == Problem::kLp ? best - 1 : best);
    }
  }
  return OptValue::plus_infinity();
}

}  // namespace bk
