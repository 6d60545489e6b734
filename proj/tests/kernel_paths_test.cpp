// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#include <gtest/gtest.h>

#include "bkernel/bkernel.hpp"
#include "kernel_checks.hpp"

namespace bk {
namespace {

using kcheck::build;
using kcheck::Spec;

Spec independent(int n, std::vector<std::pair<int, int>> edges, VertexSet b) {
  return {n, std::move(edges), b, b, TargetClass::independent()};
}

TEST(LongCycleKernelTest, WeakRegionVertexDeleted) {
  BoundariedGraph g = build(independent(4, {{0, 2}, {1, 2}, {0, 3}}, {0, 1}));
  KernelResult res = kernelize_lc_vc(g);
  EXPECT_EQ(res.reduced.graph.vertices(), (VertexSet{0, 1, 2}));
  EXPECT_EQ(res.trace.count("lc_delete"), 1);
  EXPECT_EQ(*res.delta, 0);
  EXPECT_TRUE(kcheck::equivalent(Problem::kLc, g, res, KernelKind::kLcVc, 3));
}

TEST(LongCycleKernelTest, FourCycleKeptTwinsDropped) {
  // B = {0, 2}; 1 and 3 close the 4-cycle, 4 and 5 are their twins.
  BoundariedGraph g =
      build(independent(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 4}, {0, 5}, {2, 5}}, {0, 2}));
  KernelResult res = kernelize_lc_vc(g);
  EXPECT_EQ(res.reduced.graph.vertices(), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(kcheck::equivalent(Problem::kLc, g, res, KernelKind::kLcVc, 3));
}

TEST(LongCycleKernelTest, DroppingTheFourCycleIsWrong) {
  BoundariedGraph g = build(independent(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 2}));
  KernelResult res = kernelize_lc_vc(g, {Mutation::kLcDropK});
  EXPECT_EQ(res.reduced.graph.num_vertices(), 3);
  EXPECT_FALSE(kcheck::equivalent(Problem::kLc, g, res, KernelKind::kLcVc, 3));
}

TEST(LongPathKernelTest, IsolatedRegionVertexDeleted) {
  BoundariedGraph g = build(independent(3, {{0, 1}}, {0}));
  KernelResult res = kernelize_lp_vc(g);
  EXPECT_EQ(res.reduced.graph.vertices(), (VertexSet{0, 1}));
  EXPECT_TRUE(kcheck::equivalent(Problem::kLp, g, res, KernelKind::kLpVc, 3));
}

TEST(LongPathKernelTest, PendantTwinsKeepBothEndpoints) {
  // Three pendants on 0: a path can use two of them, one at each end.
  BoundariedGraph g = build(independent(4, {{0, 1}, {0, 2}, {0, 3}}, {0}));
  KernelResult res = kernelize_lp_vc(g);
  EXPECT_EQ(res.reduced.graph.num_vertices(), 3);
  EXPECT_TRUE(kcheck::equivalent(Problem::kLp, g, res, KernelKind::kLpVc, 3));
}

TEST(LongPathKernelTest, MatchingIsDeterministic) {
  FuzzConfig cfg;
  cfg.kernel = KernelKind::kLpVc;
  for (int i = 0; i < 20; ++i) {
    BoundariedGraph g = gen_instance(cfg, i);
    EXPECT_EQ(kernelize_lp_vc(g).reduced, kernelize_lp_vc(g).reduced) << i;
  }
}

// B = {0, 1} and region vertices 2.. each adjacent to both.
Spec biclique(int region) {
  Spec s = independent(2 + region, {}, {0, 1});
  for (int v = 2; v < 2 + region; ++v) s.edges.insert(s.edges.end(), {{0, v}, {1, v}});
  return s;
}

TEST(HamiltonianKernelTest, LargeInstanceBecomesGadget) {
  BoundariedGraph g = build(biclique(4));
  for (Problem p : {Problem::kHc, Problem::kHp}) {
    KernelResult res = kernelize_hc_hp_vc(g, p);
    EXPECT_EQ(res.trace.count("hamiltonian_no_gadget"), 1);
    EXPECT_EQ(res.reduced.graph.num_vertices(), 4);
    EXPECT_EQ(res.reduced.graph.num_edges(), 0);
    EXPECT_FALSE(res.delta);
    EXPECT_TRUE(kcheck::equivalent(p, g, res, KernelKind::kHamVc, 3));
  }
}

TEST(HamiltonianKernelTest, GadgetIsNoUnderAttachments) {
  const VertexSet b{0, 1, 2};
  BoundariedGraph gadget = hamiltonian_no_gadget(b);
  FuzzConfig cfg;
  cfg.kernel = KernelKind::kHamVc;
  for (int i = 0; i < 50; ++i) {
    Graph glued = glue(gadget, gen_attachment(b, cfg, i, 5));
    EXPECT_EQ(opt_exact(Problem::kHc, glued), OptValue::yes_no(false)) << i;
    EXPECT_EQ(opt_exact(Problem::kHp, glued), OptValue::yes_no(false)) << i;
  }
}

TEST(HamiltonianKernelTest, SmallInstanceUnchanged) {
  BoundariedGraph g = build(biclique(2));
  KernelResult res = kernelize_hc_hp_vc(g, Problem::kHc);
  EXPECT_EQ(res.reduced.graph, g.graph);
  EXPECT_EQ(res.trace.total(), 0);
  EXPECT_THROW(kernelize_hc_hp_vc(g, Problem::kVc), PreconditionError);
}

TEST(HamiltonianDeg2Test, LongCycleCollapses) {
  Spec s{8, {}, {0}, {}, TargetClass::none()};
  for (int v = 0; v < 8; ++v) s.edges.push_back({v, (v + 1) % 8});
  BoundariedGraph g = build(s);
  for (Problem p : {Problem::kHc, Problem::kHp}) {
    KernelResult res = kernelize_hc_hp_deg2(g, p);
    EXPECT_EQ(res.reduced.graph.num_vertices(), 3);
    EXPECT_EQ(res.trace.count("hamiltonian_contract"), 5);
    EXPECT_TRUE(kcheck::equivalent(p, g, res, KernelKind::kHamDeg2, 3));
  }
}

TEST(HamiltonianDeg2Test, NoPairDelegatesDirectly) {
  // Claw with a subdivided edge: 4 has degree 2 but no degree-2 neighbour.
  BoundariedGraph g = build({5, {{0, 1}, {0, 2}, {0, 4}, {4, 3}}, {0}, {}});
  KernelResult res = kernelize_hc_hp_deg2(g, Problem::kHp);
  EXPECT_EQ(res.trace.count("hamiltonian_contract"), 0);
  BoundariedGraph direct = g;
  direct.modulator = VertexSet{0, 1, 2, 3};
  EXPECT_EQ(res.reduced, kernelize_hc_hp_vc(direct, Problem::kHp).reduced);
}

TEST(HamiltonianDeg2Test, ParallelEdgesCollapse) {
  // C5 with a loop at 2 and 3-4 doubled; both are ignored.
  BoundariedGraph g = build({5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 2}, {3, 4}}, {0}, {}});
  for (Problem p : {Problem::kHc, Problem::kHp}) {
    KernelResult res = kernelize_hc_hp_deg2(g, p);
    EXPECT_TRUE(res.reduced.graph.is_simple());
    EXPECT_EQ(res.reduced.graph.num_vertices(), 3);
    EXPECT_TRUE(kcheck::equivalent(p, g, res, KernelKind::kHamDeg2, 3));
  }
}

class PathKernelRandom : public ::testing::TestWithParam<KernelKind> {};

TEST_P(PathKernelRandom, SizeAndEquivalence) {
  FuzzConfig cfg;
  cfg.kernel = GetParam();
  cfg.attachments = 8;
  for (int i = 0; i < 25; ++i) {
    BoundariedGraph g = gen_instance(cfg, i);
    const Problem p = instance_problem(cfg.kernel, i);
    KernelResult res = run_kernel(cfg.kernel, g, p);
    EXPECT_EQ(size_violation(cfg.kernel, g, res), "") << i;
    EXPECT_TRUE(validate(res.reduced).empty()) << i;
    auto v = check_equivalence(p, g, res, attachments_for(g.boundary, cfg, i), i);
    EXPECT_TRUE(v.pass) << i << "\n" << v.minimized;
  }
}

INSTANTIATE_TEST_SUITE_P(Kernels, PathKernelRandom,
                         ::testing::Values(KernelKind::kLcVc, KernelKind::kLpVc,
                                           KernelKind::kHamVc, KernelKind::kHamDeg2),
                         [](const auto& info) {
                           std::string s = kernel_name(info.param);
                           for (char& c : s)
                             if (c == '/' || c == '-') c = '_';
                           return s;
                         });

}  // namespace
}  // namespace bk
