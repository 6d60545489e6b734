// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#include <random>

#include <gtest/gtest.h>

#include "bkernel/bkernel.hpp"
#include "cross_check.hpp"
#include "naive_oracles.hpp"

namespace bk {
namespace {

Graph path(int n) {
  Graph g = Graph::with_vertices(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph clique(int n) {
  Graph g = Graph::with_vertices(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph random_forest(std::mt19937_64& rng, int n, double edge_p) {
  Graph g = Graph::with_vertices(n);
  std::bernoulli_distribution keep(edge_p);
  for (int v = 1; v < n; ++v)
    if (keep(rng)) g.add_edge(v, static_cast<int>(rng() % v));
  return g;
}

// ---- exact oracles ----

TEST(OracleTest, SmallValues) {
  EXPECT_EQ(opt_exact(Problem::kVc, clique(3)), OptValue::finite(2));
  EXPECT_EQ(opt_exact(Problem::kLc, cycle(5)), OptValue::finite(5));
  EXPECT_EQ(opt_exact(Problem::kLp, path(4)), OptValue::finite(3));
  EXPECT_EQ(opt_exact(Problem::kLc, path(4)), OptValue::minus_infinity());
  EXPECT_EQ(opt_exact(Problem::kLp, Graph()), OptValue::minus_infinity());
  EXPECT_EQ(opt_exact(Problem::kTds, Graph()), OptValue::plus_infinity());
  EXPECT_EQ(opt_exact(Problem::kHc, clique(2)), OptValue::yes_no(false));
  EXPECT_EQ(opt_exact(Problem::kHp, Graph::with_vertices(1)), OptValue::yes_no(true));
  EXPECT_EQ(opt_exact(Problem::kMc, clique(4)), OptValue::finite(4));
  EXPECT_EQ(opt_exact(Problem::kDs, path(7)), OptValue::finite(3));
  EXPECT_EQ(opt_exact(Problem::kFvs, clique(5)), OptValue::finite(3));
}

TEST(OracleTest, ClusterEditingTwoTrianglesSharingAVertex) {
  Graph g = Graph::with_vertices(5);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})
    g.add_edge(u, v);
  EXPECT_EQ(opt_exact(Problem::kCe, g), naive::cluster_editing(g));
  EXPECT_EQ(opt_exact(Problem::kCe, g), OptValue::finite(2));
}

TEST(OracleTest, MultigraphHandling) {
  Graph g = Graph::with_vertices(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(2, 2);
  EXPECT_EQ(opt_exact(Problem::kFvs, g), OptValue::finite(2));
  EXPECT_THROW(opt_exact(Problem::kVc, g), PreconditionError);
  EXPECT_EQ(opt_exact(Problem::kHp, g), OptValue::yes_no(false));
  g.add_edge(1, 2);
  EXPECT_EQ(opt_exact(Problem::kHp, g), OptValue::yes_no(true));
}

TEST(OracleTest, CapExceeded) {
  OracleOptions o;
  o.cap = 4;
  EXPECT_THROW(opt_exact(Problem::kVc, path(5), o), CapExceeded);
  EXPECT_NO_THROW(opt_exact(Problem::kVc, path(4), o));
}

// Every graph on at most 7 (or 6) vertices against brute force.
class CrossValidation : public ::testing::TestWithParam<Problem> {};

TEST_P(CrossValidation, MatchesBruteForce) {
  static const std::vector<Graph> seven = naive::exhaustive_corpus(7);
  static const std::vector<Graph> six = naive::exhaustive_corpus(6);
  const Problem p = GetParam();
  const auto& sev = crosscheck::seven_vertex_problems();
  const bool big = std::find(sev.begin(), sev.end(), p) != sev.end();
  crosscheck::Report r = crosscheck::run(p, big ? seven : six);
  EXPECT_EQ(r.mismatches, 0) << r.first;
  EXPECT_GT(r.graphs, 1000);
}

INSTANTIATE_TEST_SUITE_P(AllProblems, CrossValidation,
                         ::testing::Values(Problem::kVc, Problem::kFvs, Problem::kDs, Problem::kMc,
                                           Problem::kCe, Problem::kLc, Problem::kLp, Problem::kHc,
                                           Problem::kHp, Problem::kTds),
                         [](const auto& info) { return std::string(problem_name(info.param)); });

TEST(CrossValidation, FvsOnMultigraphs) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = Graph::with_vertices(n);
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) {
        int r = static_cast<int>(rng() % 6);
        if (u == v && r == 0) g.add_edge(u, u);
        if (u != v && r >= 3) g.add_edge(u, v);
        if (u != v && r == 5) g.add_edge(u, v);
      }
    EXPECT_EQ(opt_exact(Problem::kFvs, g).value(), naive::feedback_vertex_set(g)) << round;
  }
}

// ---- special-purpose solvers ----

TEST(ForestDpTest, Examples) {
  EXPECT_EQ(vc_forest_dp(path(3)), 1);
  EXPECT_EQ(vc_forest_dp(path(4)), 2);
  EXPECT_THROW(vc_forest_dp(cycle(3)), PreconditionError);
}

TEST(ForestDpTest, LargeForestMatchesPerComponentOracle) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 5; ++round) {
    Graph g = random_forest(rng, 50, 0.9);
    long long want = 0;
    bool skipped = false;
    for (const VertexSet& c : g.components()) {
      if (c.size() > 18) {
        skipped = true;
        break;
      }
      want += opt_exact(Problem::kVc, g.induced(c)).value();
    }
    if (skipped) continue;
    EXPECT_EQ(vc_forest_dp(g), want);
  }
  // Small components guaranteed: a forest of 10 disjoint 5-vertex trees.
  Graph g = Graph::with_vertices(50);
  long long want = 0;
  for (int t = 0; t < 10; ++t) {
    for (int i = 1; i < 5; ++i) g.add_edge(5 * t + i, 5 * t + static_cast<int>(rng() % i));
  }
  for (const VertexSet& c : g.components()) want += opt_exact(Problem::kVc, g.induced(c)).value();
  EXPECT_EQ(vc_forest_dp(g), want);
}

TEST(TreedepthTest, Heights) {
  EXPECT_EQ(treedepth_decompose(Graph::with_vertices(4), 5)->height, 1);
  EXPECT_EQ(treedepth_decompose(clique(3), 5)->height, 3);
  EXPECT_EQ(treedepth_decompose(path(4), 5)->height, 3);
  EXPECT_EQ(treedepth_decompose(path(7), 5)->height, 3);
  EXPECT_EQ(treedepth_decompose(path(8), 5)->height, 4);
  EXPECT_FALSE(treedepth_decompose(path(4), 2).has_value());
  EXPECT_EQ(treedepth_decompose(cycle(5), 5)->height, 4);
}

TEST(TreedepthTest, DecompositionsAreValid) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = Graph::with_vertices(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    auto dec = treedepth_decompose(g, n);
    ASSERT_TRUE(dec);
    EXPECT_EQ(check_decomposition(g, *dec), "");
    if (dec->height > 1) {
      EXPECT_FALSE(treedepth_decompose(g, dec->height - 1));
    }
  }
}

TEST(TreedepthDpTest, Examples) {
  TreedepthDecomposition flat;
  flat.vertices = {0, 1, 2};
  flat.height = 1;
  EXPECT_EQ(vc_bounded_td_dp(Graph::with_vertices(3), flat), 0);

  TreedepthDecomposition chain;
  chain.vertices = {0, 1, 2};
  chain.parent = {{1, 0}, {2, 1}};
  chain.height = 3;
  EXPECT_EQ(vc_bounded_td_dp(clique(3), chain), 2);
  EXPECT_THROW(vc_bounded_td_dp(clique(3), flat), PreconditionError);
}

TEST(TreedepthDpTest, RandomShallowGraphs) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 20; ++round) {
    // Random rooted forest of height <= 3 on 30 vertices, edges only to ancestors.
    const int n = 30;
    Graph g = Graph::with_vertices(n);
    std::vector<int> parent(n, -1), depth(n, 1);
    for (int v = 1; v < n; ++v) {
      std::vector<int> cand;
      for (int u = 0; u < v; ++u)
        if (depth[u] < 3) cand.push_back(u);
      if (rng() % 4 == 0 || cand.empty()) continue;
      parent[v] = cand[rng() % cand.size()];
      depth[v] = depth[parent[v]] + 1;
      for (int a = parent[v]; a >= 0; a = parent[a])
        if (a == parent[v] || rng() % 2) g.add_edge(v, a);
    }
    auto dec = treedepth_decompose(g, 3);
    ASSERT_TRUE(dec);
    long long want = 0;
    for (const VertexSet& c : g.components()) want += opt_exact(Problem::kVc, g.induced(c)).value();
    EXPECT_EQ(vc_bounded_td_dp(g, *dec), want);
  }
}

TEST(MatchingTest, Examples) {
  Bipartite k33(3, 3);
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) k33.add_edge(l, r);
  EXPECT_EQ(max_matching(k33).size, 3);

  Bipartite star(1, 4);
  for (int r = 0; r < 4; ++r) star.add_edge(0, r);
  EXPECT_EQ(max_matching(star).size, 1);
}

int brute_matching(const Bipartite& b, int l, std::vector<bool>& used) {
  if (l == b.left) return 0;
  int best = brute_matching(b, l + 1, used);
  for (int r : b.adj[l])
    if (!used[r]) {
      used[r] = true;
      best = std::max(best, 1 + brute_matching(b, l + 1, used));
      used[r] = false;
    }
  return best;
}

TEST(MatchingTest, RandomBipartiteAgainstBruteForce) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 40; ++round) {
    Bipartite b(8, 8);
    for (int l = 0; l < 8; ++l)
      for (int r = 0; r < 8; ++r)
        if (rng() % 4 == 0) b.add_edge(l, r);
    Matching m = max_matching(b);
    std::vector<bool> used(8, false);
    EXPECT_EQ(m.size, brute_matching(b, 0, used));
    for (auto [l, r] : m.edges()) {
      EXPECT_NE(std::find(b.adj[l].begin(), b.adj[l].end(), r), b.adj[l].end());
      EXPECT_EQ(m.mate_right[r], l);
    }
  }
}

TEST(MatchingTest, GeneralMatching) {
  auto mate = general_max_matching(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(matching_size(mate), 2);
  mate = general_max_matching(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  EXPECT_EQ(matching_size(mate), 3);
}

TEST(HallTest, Examples) {
  Bipartite k23(2, 3);
  for (int l = 0; l < 2; ++l)
    for (int r = 0; r < 3; ++r) k23.add_edge(l, r);
  auto v = hall_violator(k23, Side::kRight);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->set.size(), 3u);
  EXPECT_EQ(v->neighborhood.size(), 2u);

  Bipartite perfect(2, 2);
  perfect.add_edge(0, 0);
  perfect.add_edge(1, 1);
  EXPECT_FALSE(hall_violator(perfect, Side::kLeft));
  EXPECT_FALSE(hall_violator(perfect, Side::kRight));
}

TEST(HallTest, RandomViolatorsRecount) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    Bipartite b(6, 4);
    for (int l = 0; l < 6; ++l)
      for (int r = 0; r < 4; ++r)
        if (rng() % 3 == 0) b.add_edge(l, r);
    auto v = hall_violator(b, Side::kLeft);
    ASSERT_TRUE(v);  // 6 > 4
    std::set<int> nb;
    for (int l : v->set)
      for (int r : b.adj[l]) nb.insert(r);
    EXPECT_EQ(std::vector<int>(nb.begin(), nb.end()), v->neighborhood);
    EXPECT_LT(nb.size(), v->set.size());
  }
}

TEST(SccTest, Examples) {
  Digraph one(1);
  EXPECT_EQ(tail_sccs(one), (std::vector<std::vector<int>>{{0}}));

  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  EXPECT_EQ(tail_sccs(d), (std::vector<std::vector<int>>{{2}}));
}

TEST(SccTest, RandomAgainstDefinition) {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 50; ++round) {
    const int n = 10;
    Digraph d(n);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
      reach[u][u] = true;
      for (int v = 0; v < n; ++v)
        if (u != v && rng() % 7 == 0) {
          d.add_arc(u, v);
          reach[u][v] = true;
        }
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    // v lies in a tail SCC iff everything it reaches reaches it back.
    std::set<int> want;
    for (int v = 0; v < n; ++v) {
      bool tail = true;
      for (int w = 0; w < n; ++w)
        if (reach[v][w] && !reach[w][v]) tail = false;
      if (tail) want.insert(v);
    }
    std::set<int> got;
    for (const auto& c : tail_sccs(d)) {
      for (int v : c) {
        got.insert(v);
        for (int w : c) EXPECT_TRUE(reach[v][w]);
      }
    }
    EXPECT_EQ(got, want);
  }
}

// Brute-force maximum number of cycles pairwise sharing only x.
int brute_flower(const Graph& g, Vertex x) {
  naive::Simple s = naive::view(g);
  std::vector<Vertex> ids = g.vertex_list();
  int xi = static_cast<int>(std::find(ids.begin(), ids.end(), x) - ids.begin());
  // Enumerate cycles through x as vertex masks (excluding x).
  std::vector<std::uint32_t> petals;
  if (s.mult[xi][xi] > 0) petals.push_back(0);
  for (int w = 0; w < s.n; ++w)
    if (w != xi && s.mult[xi][w] > 1) petals.push_back(1u << w);
  naive::all_paths(s, [&](const std::vector<int>& p) {
    if (p.front() != xi || p.size() < 3 || !naive::adj(s, p.back(), xi)) return;
    std::uint32_t m = 0;
    for (size_t i = 1; i < p.size(); ++i) m |= 1u << p[i];
    petals.push_back(m);
  });
  int best = 0;
  std::function<void(size_t, std::uint32_t, int, bool)> rec = [&](size_t i, std::uint32_t used,
                                                                   int count, bool loop) {
    best = std::max(best, count);
    for (size_t j = i; j < petals.size(); ++j) {
      if (petals[j] == 0) {
        if (!loop) rec(j + 1, used, count + 1, true);
      } else if (!(petals[j] & used)) {
        rec(j + 1, used | petals[j], count + 1, loop);
      }
    }
  };
  rec(0, 0, 0, false);
  return best;
}

TEST(FlowerTest, Examples) {
  Graph bowtie = Graph::with_vertices(5);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})
    bowtie.add_edge(u, v);
  EXPECT_EQ(max_flower_order(bowtie, 0), 2);
  EXPECT_EQ(max_flower(bowtie, 0).order, 2);

  EXPECT_EQ(max_flower_order(path(5), 2), 0);

  Graph dbl = Graph::with_vertices(3);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  EXPECT_EQ(max_flower_order(dbl, 0), 1);
  dbl.add_edge(0, 2);
  dbl.add_edge(0, 2);
  EXPECT_EQ(max_flower_order(dbl, 0), 2);
}

TEST(FlowerTest, RandomAgainstBruteForce) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 150; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = Graph::with_vertices(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    for (int v = 1; v < n; ++v)
      if (rng() % 8 == 0) g.add_edge(0, v);
    FlowerCertificate c = max_flower(g, 0);
    EXPECT_EQ(c.order, brute_flower(g, 0)) << write_bkg({g, {}, {}, {}, {}});
    EXPECT_EQ(max_flower_order(g, 0), c.order);
    EXPECT_FALSE(c.deletion.count(0));
  }
}

TEST(ExpansionTest, Examples) {
  Bipartite one(1, 2);
  one.add_edge(0, 0);
  one.add_edge(0, 1);
  ExpansionSets e = expansion_sets(one);
  EXPECT_EQ(e.x, (std::vector<int>{0}));
  EXPECT_EQ(e.y, (std::vector<int>{0, 1}));

  Bipartite two(2, 4);
  for (int l = 0; l < 2; ++l)
    for (int r = 0; r < 4; ++r) two.add_edge(l, r);
  e = expansion_sets(two);
  EXPECT_EQ(e.x, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.y.size(), 4u);

  Bipartite bad(1, 3);
  bad.add_edge(0, 0);
  bad.add_edge(0, 1);
  EXPECT_THROW(expansion_sets(bad), PreconditionError);
}

TEST(ExpansionTest, RandomSatisfyTwoExpansion) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 100; ++round) {
    int left = 1 + static_cast<int>(rng() % 3);
    int right = 2 * left + static_cast<int>(rng() % 4);
    Bipartite b(left, right);
    for (int r = 0; r < right; ++r) {
      b.add_edge(static_cast<int>(rng() % left), r);
      for (int l = 0; l < left; ++l)
        if (rng() % 3 == 0) b.add_edge(l, r);
    }
    b.normalize();
    ExpansionSets e = expansion_sets(b);
    ASSERT_FALSE(e.x.empty());
    // Every subset Z of X' sees at least 2|Z| vertices of Y'.
    std::set<int> ys(e.y.begin(), e.y.end());
    for (std::uint32_t m = 1; m < (1u << e.x.size()); ++m) {
      std::set<int> nb;
      for (size_t i = 0; i < e.x.size(); ++i)
        if (m >> i & 1)
          for (int r : b.adj[e.x[i]])
            if (ys.count(r)) nb.insert(r);
      EXPECT_GE(nb.size(), 2u * naive::count_bits(m));
    }
  }
}

}  // namespace
}  // namespace bk
