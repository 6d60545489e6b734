// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.
//
// bkernel: command-line front end for the kernels, oracles, lower-bound
// families and the equivalence harness.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bkernel/bkernel.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kUnsupported = 3, kCap = 4, kFailures = 5 };

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bk::PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bk::PreconditionError("cannot write " + path);
  out << text;
}

bk::BoundariedGraph load(const std::string& path) { return bk::parse_bkg(read_file(path)); }

// Pairs ruled out because gluing-equivalence has too many classes; the
// family named reproduces the separating construction.
const std::map<std::string, std::string>& excluded_pairs() {
  static const std::map<std::string, std::string> m = {
      {"ce/ce", "no finite integer index (see verify-lb --name ce-cliques)"},
      {"ce/cvd", "no finite integer index (see verify-lb --name ce-cliques)"},
      {"mc/vc", "no finite integer index (see verify-lb --name mc-bipartite)"},
      {"tds/vc", "no finite integer index (see verify-lb --name tds-star)"},
      {"tds/tds", "no finite integer index (see verify-lb --name tds-tree)"},
      {"lc/deg2", "no finite integer index (see verify-lb --name lc-deg2)"},
      {"lp/deg2", "no finite integer index (see verify-lb --name lp-deg2)"},
      {"ds/vc", "gluing-equivalence index is not single-exponential (see verify-lb --name "
                "ds-subsets)"},
  };
  return m;
}

struct ParamSpec {
  std::string base;  // vc, fvs, td, deg2, ...
  int depth = 0;
};

ParamSpec parse_param(const std::string& s) {
  ParamSpec p;
  if (s.rfind("td:", 0) == 0) {
    p.base = "td";
    try {
      size_t used = 0;
      p.depth = std::stoi(s.substr(3), &used);
      if (used != s.size() - 3 || p.depth < 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--param", "treedepth must be td:<d> with d >= 1");
    }
    return p;
  }
  p.base = s;
  return p;
}

bk::Problem require_problem(const std::string& s) {
  auto p = bk::parse_problem(s);
  if (!p) throw CLI::ValidationError("--problem", "unknown problem '" + s + "'");
  return *p;
}

void check_pair(bk::Problem problem, const ParamSpec& param) {
  const std::string key = std::string(bk::problem_name(problem)) + "/" + param.base;
  auto ex = excluded_pairs().find(key);
  if (ex != excluded_pairs().end())
    throw Unsupported(key + ": no polynomial boundaried kernelization exists: " + ex->second);
  using P = bk::Problem;
  const bool ham = problem == P::kHc || problem == P::kHp;
  const bool ok = (problem == P::kVc && (param.base == "vc" || param.base == "fvs" ||
                                         param.base == "td")) ||
                  (problem == P::kFvs && param.base == "fvs") ||
                  ((problem == P::kLc || problem == P::kLp || ham) && param.base == "vc") ||
                  (ham && param.base == "deg2");
  if (!ok) throw Unsupported(key + ": combination not supported");
}

bk::KernelResult dispatch(bk::Problem problem, const ParamSpec& param,
                          const bk::BoundariedGraph& g) {
  check_pair(problem, param);
  using P = bk::Problem;
  if (problem == P::kVc && param.base == "vc") return bk::kernelize_vc_vc(g);
  if (problem == P::kVc && param.base == "fvs") return bk::kernelize_vc_fvs(g);
  if (problem == P::kVc && param.base == "td") return bk::kernelize_vc_td(g, param.depth);
  if (problem == P::kFvs && param.base == "fvs") return bk::kernelize_fvs_fvs(g);
  if (problem == P::kLc && param.base == "vc") return bk::kernelize_lc_vc(g);
  if (problem == P::kLp && param.base == "vc") return bk::kernelize_lp_vc(g);
  if ((problem == P::kHc || problem == P::kHp) && param.base == "vc")
    return bk::kernelize_hc_hp_vc(g, problem);
  if ((problem == P::kHc || problem == P::kHp) && param.base == "deg2")
    return bk::kernelize_hc_hp_deg2(g, problem);
  throw Unsupported("combination not supported");
}

long long param_value(const ParamSpec& p, const bk::BoundariedGraph& g) {
  if (p.base == "deg2") {
    long long c = 0;
    for (bk::Vertex v : g.graph.vertex_list()) c += g.graph.simple_degree(v) != 2;
    return c;
  }
  return bk::modulator_size(g);
}

Json run_report(const std::string& problem, const std::string& param, const bk::BoundariedGraph& in,
                const bk::KernelResult& res, long long pv, std::optional<double> elapsed,
                std::uint64_t seed) {
  Json j;
  j["problem"] = problem;
  j["parameterization"] = param;
  j["n_in"] = res.stats.n_in;
  j["m_in"] = res.stats.m_in;
  j["n_out"] = res.stats.n_out;
  j["m_out"] = res.stats.m_out;
  j["boundary_size"] = in.boundary.size();
  j["param_value"] = pv;
  j["delta"] = res.delta ? Json(*res.delta) : Json(nullptr);
  Json rules = Json::object();
  for (const auto& [name, count] : res.trace.entries()) rules[name] = count;
  j["rules"] = rules;
  j["elapsed_ms"] = elapsed ? Json(*elapsed) : Json(nullptr);
  j["seed"] = seed;
  j["tool_version"] = bk::kToolVersion;
  return j;
}

std::string format_opt(bk::Problem p, const bk::OptValue& v) {
  if (!bk::is_optimization(p)) return v.value() ? "YES" : "NO";
  return v.to_string();
}

const std::map<std::string, bk::Mutation>& mutation_names() {
  static const std::map<std::string, bk::Mutation> m = {
      {"none", bk::Mutation::kNone},
      {"vc-wrong-delta", bk::Mutation::kVcWrongDelta},
      {"vc-drop-boundary", bk::Mutation::kVcDropBoundary},
      {"vcfvs-wrong-delta", bk::Mutation::kVcFvsWrongDelta},
      {"conf1-skip-rewire", bk::Mutation::kConf1SkipRewire},
      {"conf1-skip-edge", bk::Mutation::kConf1SkipEdge},
      {"conf2-skip-rewire", bk::Mutation::kConf2SkipRewire},
      {"lc-drop-k", bk::Mutation::kLcDropK},
      {"fvs-bypass-boundary-pair", bk::Mutation::kFvsBypassBoundaryPair},
      {"lp-wrong-delta", bk::Mutation::kLpWrongDelta},
      {"vctd-drop-boundary", bk::Mutation::kVcTdDropBoundary},
  };
  return m;
}

bk::FuzzConfig fuzz_config(const Json& j) {
  bk::FuzzConfig c;
  auto kernel = bk::parse_kernel(j.value("kernel", std::string("vc/vc")));
  if (!kernel) throw bk::PreconditionError("fuzz config: unknown kernel");
  c.kernel = *kernel;
  c.seed = j.value("seed", c.seed);
  c.instances = j.value("instances", c.instances);
  c.max_n = j.value("max_n", c.max_n);
  c.max_b = j.value("max_b", c.max_b);
  c.max_k = j.value("max_k", c.max_k);
  c.max_fresh = j.value("max_fresh", c.max_fresh);
  c.densities = j.value("densities", c.densities);
  c.instance_densities = j.value("instance_densities", c.instance_densities);
  c.attachments = j.value("attachments", c.attachments);
  c.exhaustive_small = j.value("exhaustive_small", c.exhaustive_small);
  c.td_depths = j.value("td_depths", c.td_depths);
  c.workers = j.value("workers", c.workers);
  c.stop_at_first_failure = j.value("stop_at_first_failure", c.stop_at_first_failure);
  const std::string mut = j.value("mutation", std::string("none"));
  auto it = mutation_names().find(mut);
  if (it == mutation_names().end()) throw bk::PreconditionError("fuzz config: unknown mutation");
  c.mutation = it->second;
  if (c.instances < 0 || c.max_n < 2 || c.max_b < 0 || c.max_k < 0 || c.max_fresh < 0 ||
      c.attachments < 0 || c.densities.empty() || c.instance_densities.empty() ||
      c.td_depths.empty())
    throw bk::PreconditionError("fuzz config: value out of range");
  return c;
}

Json separation_json(const bk::SeparationReport& r) {
  Json j;
  j["family"] = r.spec.name;
  j["i"] = r.spec.i;
  j["j"] = r.spec.j;
  if (r.spec.name == "ds-subsets") j["q"] = r.spec.q;
  j["witnesses"] = r.witness_note;
  Json vals = Json::array();
  for (const auto& v : r.values) vals.push_back(v.to_string());
  j["optima"] = vals;
  j["separated"] = r.separated;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["what"] = c.what;
    cj["expected"] = c.expected;
    cj["got"] = c.got.to_string();
    cj["ok"] = c.ok;
    checks.push_back(cj);
  }
  j["closed_forms"] = checks;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundaried kernelization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bk::kToolVersion);

  std::string problem, param, in_path, out_path, report_path;
  std::uint64_t seed = 0;
  bool timing = false;
  auto* kernelize = app.add_subcommand("kernelize", "Run a boundaried kernelization");
  kernelize->add_option("--problem", problem, "vc, fvs, lc, lp, hc or hp")->required();
  kernelize->add_option("--param", param, "vc, fvs, td:<d> or deg2")->required();
  kernelize->add_option("--in", in_path, "Input BKG file")->required();
  kernelize->add_option("--out", out_path, "Output BKG file (default stdout)");
  kernelize->add_option("--report", report_path, "Report JSON file");
  kernelize->add_option("--seed", seed, "Seed recorded in the report");
  kernelize->add_flag("--timing", timing, "Record elapsed_ms in the report");

  std::string glue_a, glue_b;
  auto* glue = app.add_subcommand("glue", "Glue two boundaried graphs");
  glue->add_option("a", glue_a, "First BKG file")->required();
  glue->add_option("b", glue_b, "Second BKG file")->required();
  glue->add_option("--out", out_path, "Output BKG file (default stdout)");

  std::string solve_in;
  int cap = 18;
  auto* solve = app.add_subcommand("solve", "Exact optimum by brute force");
  solve->add_option("--problem", problem, "Problem name")->required();
  solve->add_option("file", solve_in, "BKG file")->required();
  solve->add_option("--cap", cap, "Vertex cap of the oracle");

  std::string config_path, kernel_name;
  std::optional<int> instances;
  std::optional<std::uint64_t> fuzz_seed;
  auto* fuzz = app.add_subcommand("fuzz", "Gluing-equivalence campaign");
  fuzz->add_option("--config", config_path, "JSON config");
  fuzz->add_option("--kernel", kernel_name, "Kernel, e.g. vc/fvs (overrides config)");
  fuzz->add_option("--instances", instances, "Instance count (overrides config)");
  fuzz->add_option("--seed", fuzz_seed, "Seed (overrides config)");
  fuzz->add_option("--out", out_path, "Verdict JSON-lines file (default stdout)");

  std::string fam_name, out_dir;
  int fi = 0, fj = 1, fq = 4;
  bool all_pairs = false;
  auto* family = app.add_subcommand("family", "Write a lower-bound family pair");
  family->add_option("--name", fam_name, "Family name")->required();
  family->add_option("--i", fi, "First index (bitmask for ds-subsets)");
  family->add_option("--j", fj, "Second index (bitmask for ds-subsets)");
  family->add_option("--q", fq, "Boundary size for ds-subsets");
  family->add_option("--out-dir", out_dir, "Output directory")->required();

  auto* verify = app.add_subcommand("verify-lb", "Check a lower-bound separation");
  verify->add_option("--name", fam_name, "Family name")->required();
  verify->add_option("--i", fi, "First index (bitmask for ds-subsets)");
  verify->add_option("--j", fj, "Second index (bitmask for ds-subsets)");
  verify->add_option("--q", fq, "Boundary size for ds-subsets");
  verify->add_flag("--all-pairs", all_pairs, "ds-subsets: separate every member pair");

  long long ell = 0;
  auto* derive = app.add_subcommand("derive-kernel", "Regular kernel from the boundaried one");
  derive->add_option("--problem", problem, "Only vc")->required();
  derive->add_option("--param", param, "td:<d>")->required();
  derive->add_option("--ell", ell, "Solution size bound")->required();
  derive->add_option("--in", in_path, "Input BKG file")->required();
  derive->add_option("--out", out_path, "Output BKG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*kernelize) {
      const bk::Problem p = require_problem(problem);
      const ParamSpec ps = parse_param(param);
      check_pair(p, ps);
      bk::BoundariedGraph g = load(in_path);
      auto t0 = std::chrono::steady_clock::now();
      bk::KernelResult res = dispatch(p, ps, g);
      std::optional<double> elapsed;
      if (timing)
        elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
      write_text(out_path, bk::write_bkg(res.reduced));
      Json rep = run_report(problem, param, g, res, param_value(ps, g), elapsed, seed);
      if (!report_path.empty()) write_text(report_path, rep.dump(2) + "\n");
      else if (!out_path.empty()) std::cout << rep.dump(2) << "\n";
      return kOk;
    }
    if (*glue) {
      write_text(out_path, bk::write_bkg(bk::glue_boundaried(load(glue_a), load(glue_b))));
      return kOk;
    }
    if (*solve) {
      const bk::Problem p = require_problem(problem);
      bk::OracleOptions o;
      o.cap = cap;
      o.ce_cap = std::min(cap, o.ce_cap);
      std::cout << format_opt(p, bk::opt_exact(p, load(solve_in).graph, o)) << "\n";
      return kOk;
    }
    if (*fuzz) {
      Json cfg_json = config_path.empty() ? Json::object() : Json::parse(read_file(config_path));
      if (!kernel_name.empty()) cfg_json["kernel"] = kernel_name;
      if (instances) cfg_json["instances"] = *instances;
      if (fuzz_seed) cfg_json["seed"] = *fuzz_seed;
      bk::FuzzConfig cfg = fuzz_config(cfg_json);
      std::ostringstream lines;
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!out_path.empty() && out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) throw bk::PreconditionError("cannot write " + out_path);
        out = &file;
      }
      bk::FuzzSummary sum = bk::run_fuzz(cfg, [&](const bk::InstanceOutcome& o) {
        *out << bk::outcome_json(cfg, o).dump() << "\n";
      });
      Json s;
      s["summary"] = true;
      s["kernel"] = bk::kernel_name(cfg.kernel);
      s["seed"] = cfg.seed;
      s["instances"] = sum.instances;
      s["attachments"] = sum.attachments;
      s["failures"] = sum.failures;
      s["size_violations"] = sum.size_violations;
      s["fixpoint_violations"] = sum.fixpoint_violations;
      s["errors"] = sum.errors;
      *out << s.dump() << "\n";
      return sum.clean() ? kOk : kFailures;
    }
    if (*family) {
      bk::FamilySpec spec{fam_name, fi, fj, fq};
      bk::Family f = bk::gen_family(spec);
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      write_text((dir / "member_i.bkg").string(), bk::write_bkg(f.members[0]));
      write_text((dir / "member_j.bkg").string(), bk::write_bkg(f.members[1]));
      write_text((dir / "witness_1.bkg").string(), bk::write_bkg(f.witnesses[0]));
      write_text((dir / "witness_2.bkg").string(), bk::write_bkg(f.witnesses[1]));
      Json j;
      j["family"] = fam_name;
      j["problem"] = bk::problem_name(f.problem);
      j["i"] = fi;
      j["j"] = fj;
      if (fam_name == "ds-subsets") j["q"] = fq;
      j["witnesses"] = f.witness_note;
      write_text((dir / "family.json").string(), j.dump(2) + "\n");
      return kOk;
    }
    if (*verify) {
      if (all_pairs) {
        if (fam_name != "ds-subsets")
          throw bk::PreconditionError("--all-pairs applies to ds-subsets only");
        bk::DsIndexReport r = bk::demonstrate_ds_index(fq);
        Json j;
        j["family"] = fam_name;
        j["q"] = r.q;
        j["members"] = r.members;
        j["pairs"] = r.pairs;
        j["separated_by_pendants"] = r.separated_by_pendants;
        j["separated_other"] = r.separated_other;
        j["unseparated"] = r.unseparated;
        j["full_witness_optimum_q"] = r.all_full_witness_q;
        if (fq >= 4) j["bounds_ok"] = r.bounds_ok;
        std::cout << j.dump(2) << "\n";
        return r.all_separated() && r.all_full_witness_q && r.bounds_ok ? kOk : kFailures;
      }
      bk::SeparationReport r = bk::verify_separation({fam_name, fi, fj, fq});
      std::cout << separation_json(r).dump(2) << "\n";
      return r.separated && r.closed_forms_ok() ? kOk : kFailures;
    }
    if (*derive) {
      if (problem != "vc") throw Unsupported(problem + ": derive-kernel supports vc only");
      const ParamSpec ps = parse_param(param);
      if (ps.base != "td") throw Unsupported(param + ": derive-kernel needs td:<d>");
      bk::BoundariedGraph g = load(in_path);
      if (!g.boundary.empty()) throw bk::PreconditionError("derive-kernel: boundary must be empty");
      if (!g.modulator) throw bk::PreconditionError("derive-kernel: modulator missing");
      bk::RegularKernel k = bk::regular_kernel_vc_td(g.graph, *g.modulator, ps.depth, ell);
      if (!out_path.empty()) write_text(out_path, bk::write_bkg(k.instance));
      Json j;
      j["problem"] = "vc";
      j["parameterization"] = param;
      j["n_in"] = g.graph.num_vertices();
      j["n_out"] = k.instance.graph.num_vertices();
      j["ell_in"] = ell;
      j["ell_out"] = k.ell;
      j["delta"] = k.delta;
      j["trivial_no"] = k.trivial_no;
      j["tool_version"] = bk::kToolVersion;
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
  } catch (const Unsupported& e) {
    std::cerr << "bkernel: " << e.what() << "\n";
    return kUnsupported;
  } catch (const bk::CapExceeded& e) {
    std::cerr << "bkernel: " << e.what() << "\n";
    return kCap;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "bkernel: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "bkernel: " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}
