// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.
//
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bkernel/bkernel.hpp"
#include "cli_run.hpp"
#include "cross_check.hpp"

namespace {

using namespace bk;

// Pinned tolerances.
constexpr int kFuzzInstances = 500;
constexpr int kFuzzAttachments = 20;
constexpr int kFuzzMaxN = 14;
constexpr int kFuzzMaxB = 4;
constexpr int kFuzzMaxK = 3;
constexpr int kFuzzMaxFresh = 6;
constexpr double kFuzzBudgetSeconds = 600;
constexpr double kLowerBoundBudgetSeconds = 300;
constexpr long long kSizeConstant = 30;  // FVS and VC[td] size bounds
constexpr long long kRegularConstant = 30;
constexpr int kRegularInstances = 200;
constexpr int kCrossSevenMax = 7;
constexpr int kCrossSixMax = 6;
constexpr int kMutants = 10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failed = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  failed += !ok;
}

FuzzConfig base_config(KernelKind k) {
  FuzzConfig c;
  c.kernel = k;
  c.instances = kFuzzInstances;
  c.attachments = kFuzzAttachments;
  c.max_n = kFuzzMaxN;
  c.max_b = kFuzzMaxB;
  c.max_k = kFuzzMaxK;
  c.max_fresh = kFuzzMaxFresh;
  c.exhaustive_small = true;
  return c;
}

void criterion_fuzz() {
  const auto t0 = Clock::now();
  bool ok = true;
  long long attachments = 0;
  int min_attachments = 1 << 30;
  std::ostringstream bad;
  for (KernelKind k : all_kernels()) {
    const FuzzConfig cfg = base_config(k);
    FuzzSummary s = run_fuzz(cfg, [&](const InstanceOutcome& o) {
      min_attachments = std::min(min_attachments, o.verdict.attachments_checked);
    });
    attachments += s.attachments;
    if (s.failures || s.errors || s.instances < kFuzzInstances) {
      ok = false;
      bad << " " << kernel_name(k) << ":" << s.failures << "f/" << s.errors << "e";
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && min_attachments >= kFuzzAttachments && secs < kFuzzBudgetSeconds;
  std::ostringstream d;
  d << all_kernels().size() << " kernels x " << kFuzzInstances << " instances, " << attachments
    << " attachments, min " << min_attachments << " per instance, " << secs << " s"
    << bad.str();
  report(1, ok, "gluing-equivalence fuzz", d.str());
}

void criterion_sizes() {
  bool ok = true;
  int runs = 0;
  double fvs_c = 0, td_c[4] = {0, 0, 0, 0};
  std::ostringstream bad;
  for (KernelKind k : all_kernels()) {
    FuzzConfig cfg = base_config(k);
    for (int i = 0; i < cfg.instances; ++i) {
      BoundariedGraph g = gen_instance(cfg, i);
      KernelResult res = run_kernel(k, g, instance_problem(k, i));
      ++runs;
      std::string v = size_violation(k, g, res, kSizeConstant);
      if (!v.empty()) {
        ok = false;
        bad << " " << kernel_name(k) << "#" << i << ": " << v;
      }
      const double bk = static_cast<double>(g.boundary.size()) + modulator_size(g);
      const double n = res.reduced.graph.num_vertices();
      if (bk == 0) continue;
      if (k == KernelKind::kFvsFvs) fvs_c = std::max(fvs_c, n / (bk * bk));
      if (k == KernelKind::kVcTd) {
        const int d = g.target.depth;
        td_c[d] = std::max(td_c[d], n / std::pow(bk, 1 << (d - 1)));
      }
    }
  }
  std::ostringstream d;
  d << runs << " kernel runs; measured c: fvs " << fvs_c << ", vc[td2] " << td_c[2]
    << ", vc[td3] " << td_c[3] << " (limit " << kSizeConstant << ")" << bad.str();
  report(2, ok, "kernel size bounds", d.str());
}

void criterion_lower_bounds() {
  const auto t0 = Clock::now();
  struct Range {
    const char* name;
    int lo, hi;
  };
  const Range ranges[] = {{"ce-cliques", 0, 5}, {"mc-bipartite", 0, 4}, {"tds-star", 1, 5},
                          {"tds-tree", 2, 5},   {"lc-deg2", 0, 5},      {"lp-deg2", 0, 5}};
  bool ok = true;
  int reports = 0, checks = 0;
  std::ostringstream bad;
  for (const Range& r : ranges)
    for (int i = r.lo; i <= r.hi; ++i)
      for (int j = r.lo; j <= r.hi; ++j) {
        if (i == j) continue;
        SeparationReport s = verify_separation({r.name, i, j, 0});
        ++reports;
        checks += static_cast<int>(s.checks.size());
        if (!s.separated || !s.closed_forms_ok()) {
          ok = false;
          bad << " " << r.name << "(" << i << "," << j << ")";
        }
      }
  long long ds_pairs = 0;
  for (int q = 2; q <= 4; ++q) {
    DsIndexReport d = demonstrate_ds_index(q);
    ds_pairs += d.pairs;
    if (!d.all_separated() || !d.all_full_witness_q || !d.bounds_ok) {
      ok = false;
      bad << " ds q=" << q;
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kLowerBoundBudgetSeconds;
  std::ostringstream d;
  d << reports << " separations, " << checks << " closed forms, " << ds_pairs
    << " ds member pairs (q=2..4), " << secs << " s" << bad.str();
  report(3, ok, "lower-bound closed forms", d.str());
}

void criterion_regular() {
  bool ok = true;
  int checked = 0;
  std::ostringstream bad;
  // Empty boundary, empty attachment: the offset is the optimum difference.
  for (KernelKind k : all_kernels()) {
    if (k == KernelKind::kHamVc || k == KernelKind::kHamDeg2) continue;
    FuzzConfig cfg = base_config(k);
    for (int i = 0; i < 100; ++i) {
      BoundariedGraph g = gen_instance(cfg, i);
      g.modulator = set_union(*g.modulator, g.boundary);
      g.boundary.clear();
      g.td_parent.clear();  // the sidecar may mention former boundary vertices
      const Problem p = instance_problem(k, i);
      KernelResult res = run_kernel(k, g, p);
      const OracleOptions o = harness_oracle_options();
      ++checked;
      if (!(opt_exact(p, g.graph, o) == opt_exact(p, res.reduced.graph, o).plus(*res.delta))) {
        ok = false;
        bad << " " << kernel_name(k) << "#" << i;
      }
    }
  }
  // The regular kernel for treedepth 2.
  FuzzConfig cfg = base_config(KernelKind::kVcTd);
  cfg.td_depths = {2};
  double worst = 0;
  int answers = 0;
  for (int i = 0; i < kRegularInstances; ++i) {
    BoundariedGraph g = gen_instance(cfg, i);
    const VertexSet x = set_union(g.boundary, *g.modulator);
    const long long opt = opt_exact(Problem::kVc, g.graph).value();
    const double k = static_cast<double>(x.size());
    for (long long ell : {opt - 1, opt}) {
      if (ell < 0) continue;
      RegularKernel r = regular_kernel_vc_td(g.graph, x, 2, ell);
      const double n = r.instance.graph.num_vertices();
      if (k > 0) worst = std::max(worst, n / (k * k));
      if (k == 0 && n > 0 && !r.trivial_no) ok = false;
      const bool kernel_yes =
          !r.trivial_no && opt_exact(Problem::kVc, r.instance.graph).value() <= r.ell;
      ++answers;
      if (kernel_yes != (opt <= ell)) {
        ok = false;
        bad << " regular#" << i;
      }
    }
  }
  ok = ok && worst <= kRegularConstant;
  std::ostringstream d;
  d << checked << " empty-boundary offsets; " << kRegularInstances << " treedepth-2 instances, "
    << answers << " answers, measured c " << worst << " (limit " << kRegularConstant << ")"
    << bad.str();
  report(4, ok, "regular kernel", d.str());
}

void criterion_fixpoints() {
  bool ok = true;
  int runs = 0;
  std::ostringstream bad;
  for (KernelKind k : {KernelKind::kVcVc, KernelKind::kVcFvs, KernelKind::kFvsFvs}) {
    FuzzConfig cfg = base_config(k);
    for (int i = 0; i < cfg.instances; ++i) {
      BoundariedGraph g = gen_instance(cfg, i);
      KernelResult res = run_kernel(k, g, instance_problem(k, i));
      ++runs;
      auto v = fixpoint_violations(k, res);
      if (!v.empty()) {
        ok = false;
        bad << " " << kernel_name(k) << "#" << i << ": " << v.front();
      }
    }
  }
  std::ostringstream d;
  d << runs << " runs of vc/vc, vc/fvs, fvs/fvs" << bad.str();
  report(5, ok, "fixpoint invariants", d.str());
}

void criterion_cross_validation() {
  bool ok = true;
  long long graphs = 0;
  std::ostringstream bad;
  auto sweep = [&](const std::vector<Problem>& ps, int max_n) {
    const auto corpus = naive::exhaustive_corpus(max_n);
    for (Problem p : ps) {
      crosscheck::Report r = crosscheck::run(p, corpus);
      graphs += r.graphs;
      if (r.mismatches) {
        ok = false;
        bad << " " << problem_name(p) << ":" << r.mismatches;
      }
    }
  };
  sweep(crosscheck::seven_vertex_problems(), kCrossSevenMax);
  sweep(crosscheck::six_vertex_problems(), kCrossSixMax);
  std::ostringstream d;
  d << graphs << " oracle comparisons; vc/fvs/ds/mc up to " << kCrossSevenMax
    << " vertices, ce/lc/lp/hc/hp/tds up to " << kCrossSixMax << bad.str();
  report(6, ok, "oracle cross-validation", d.str());
}

void criterion_mutants() {
  const std::pair<Mutation, KernelKind> mutants[] = {
      {Mutation::kVcWrongDelta, KernelKind::kVcVc},
      {Mutation::kVcDropBoundary, KernelKind::kVcVc},
      {Mutation::kVcFvsWrongDelta, KernelKind::kVcFvs},
      {Mutation::kConf1SkipRewire, KernelKind::kVcFvs},
      {Mutation::kConf1SkipEdge, KernelKind::kVcFvs},
      {Mutation::kConf2SkipRewire, KernelKind::kVcFvs},
      {Mutation::kLcDropK, KernelKind::kLcVc},
      {Mutation::kFvsBypassBoundaryPair, KernelKind::kFvsFvs},
      {Mutation::kLpWrongDelta, KernelKind::kLpVc},
      {Mutation::kVcTdDropBoundary, KernelKind::kVcTd},
  };
  int detected = 0, total = 0;
  std::ostringstream d, missed;
  for (auto [m, k] : mutants) {
    FuzzConfig cfg = base_config(k);
    cfg.mutation = m;
    cfg.stop_at_first_failure = true;
    int first = -1;
    FuzzSummary s = run_fuzz(cfg, [&](const InstanceOutcome& o) {
      if (first < 0 && (!o.verdict.pass || !o.error.empty())) first = o.verdict.instance;
    });
    ++total;
    if (s.failures > 0) {
      ++detected;
      d << " " << static_cast<int>(m) << "@" << first;
    } else {
      missed << " missed mutant " << static_cast<int>(m);
    }
  }
  report(7, detected == kMutants && total == kMutants, "fault injection",
         std::to_string(detected) + "/" + std::to_string(total) +
             " mutants caught (mutant@instance)" + d.str() + missed.str());
}

void criterion_determinism() {
  const auto dir = clirun::scratch("acceptance");
  struct Job {
    std::string problem, param;
    KernelKind kind;
  };
  const Job jobs[] = {{"vc", "vc", KernelKind::kVcVc},   {"vc", "fvs", KernelKind::kVcFvs},
                      {"vc", "td:2", KernelKind::kVcTd}, {"fvs", "fvs", KernelKind::kFvsFvs},
                      {"lc", "vc", KernelKind::kLcVc},   {"lp", "vc", KernelKind::kLpVc},
                      {"hc", "vc", KernelKind::kHamVc},  {"hp", "deg2", KernelKind::kHamDeg2}};
  std::vector<std::string> commands;
  for (const Job& j : jobs) {
    FuzzConfig cfg = base_config(j.kind);
    cfg.td_depths = {2};
    for (int i = 0; i < 5; ++i) {
      const std::string in = (dir / (j.problem + std::to_string(static_cast<int>(j.kind)) + "_" +
                                     std::to_string(i) + ".bkg"))
                                 .string();
      clirun::spit(in, write_bkg(gen_instance(cfg, i)));
      commands.push_back("kernelize --problem " + j.problem + " --param " + j.param + " --in " +
                         in + " --out - --seed 7");
    }
    commands.push_back(std::string("fuzz --kernel ") + kernel_name(j.kind) + " --instances 10");
  }
  commands.push_back("verify-lb --name ds-subsets --q 3 --all-pairs");
  commands.push_back("verify-lb --name tds-tree --i 2 --j 4");
  int same = 0, nonzero = 0;
  long long bytes = 0;
  for (const std::string& c : commands) {
    clirun::Output a = clirun::run(c), b = clirun::run(c);
    same += a.out == b.out && a.code == b.code;
    nonzero += a.code != 0;
    bytes += static_cast<long long>(a.out.size());
  }
  std::filesystem::remove_all(dir);
  const int n = static_cast<int>(commands.size());
  report(8, same == n && nonzero == 0, "byte-identical CLI output",
         std::to_string(same) + "/" + std::to_string(n) + " commands identical over two runs, " +
             std::to_string(bytes) + " bytes, " + std::to_string(nonzero) + " nonzero exits");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      criterion_fuzz,     criterion_sizes,           criterion_lower_bounds, criterion_regular,
      criterion_fixpoints, criterion_cross_validation, criterion_mutants,      criterion_determinism};
  for (size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, "exception", e.what());
    }
  }
  return failed == 0 ? 0 : 1;
}
