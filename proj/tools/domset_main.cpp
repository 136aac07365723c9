#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "domset/errors.hpp"
#include "domset/generate.hpp"
#include "domset/instance_io.hpp"
#include "domset/msest.hpp"
#include "domset/oracle.hpp"
#include "domset/pareto.hpp"
#include "domset/result_doc.hpp"
#include "domset/solve.hpp"
#include "domset/version.hpp"

namespace {

using namespace domset;

constexpr int kExitSuccess = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitOracleMismatch = 4;

int status_exit(SolveStatus s) {
  return s == SolveStatus::Infeasible ? kExitInfeasible : kExitSuccess;
}

std::string format_weight(const WeightValue& w) {
  if (w.integral()) return std::to_string(w.units / w.scale);
  return ResultJson(w.value()).dump();
}

std::string format_objective_vector(const ParetoPoint& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.objective.size(); ++j) {
    if (j) out += ", ";
    if (!p.objective_units.empty() && p.objective[j] == static_cast<double>(
                                          static_cast<long long>(p.objective[j])))
      out += std::to_string(static_cast<long long>(p.objective[j]));
    else
      out += ResultJson(p.objective[j]).dump();
  }
  return out + ")";
}

void print_certificate_lines(std::ostream& out,
                             const FeasibilityCertificate& cert) {
  out << "dominating    " << (cert.dominating ? "yes" : "no") << "\n";
  out << "m-dominating  " << (cert.m_dominating ? "yes" : "no") << " (m="
      << cert.m_checked << ")\n";
  out << "connected     " << (cert.connected ? "yes" : "no") << "\n";
  out << "connectivity  " << cert.connectivity << "\n";
  if (!cert.violations.empty()) {
    out << "violations\n";
    for (const auto& v : cert.violations) {
      out << "  ";
      if (v.vertex > 0) out << "vertex " << v.vertex << ": ";
      out << v.reason << "\n";
    }
  }
}

// ---- solve ----

struct SolveArgs {
  std::string graph, weights, variant, method;
  int k = -1;  // -1: default per variant
  int m = 1;
  bool json = false;
};

ProblemSpec build_spec(const SolveArgs& a, const InstanceBundle& bundle) {
  ProblemSpec spec;
  spec.variant = a.variant == "cds" ? Variant::CDS : Variant::DS;
  spec.k = a.k >= 0 ? a.k : (spec.variant == Variant::CDS ? 1 : 0);
  if (spec.variant == Variant::DS && spec.k != 0)
    throw InputError("plain domination takes no connectivity level; use "
                     "--variant cds for k >= 1");
  spec.m = a.m;
  if (bundle.weights) spec.weights = bundle.weights->to_scalar();
  if (a.method == "exact") spec.method = Method::ExactEnum;
  else if (a.method == "bb") spec.method = Method::BranchBound;
  else if (a.method == "greedy") spec.method = Method::Greedy;
  else spec.method = Method::TwoPhase;
  return spec;
}

int run_solve(const SolveArgs& a) {
  InstanceBundle bundle = load_bundle(a.graph, a.weights);
  ProblemSpec spec = build_spec(a, bundle);
  SolveResult r = solve(bundle.graph, spec);
  if (a.json) {
    std::cout << render_json(describe_solve(bundle.graph, spec, r));
  } else {
    std::cout << "variant       " << to_string(spec.variant) << " (k="
              << spec.k << ", m=" << spec.m << ")\n";
    std::cout << "method        " << to_string(r.method) << "\n";
    std::cout << "status        " << to_string(r.status) << "\n";
    if (r.status != SolveStatus::Infeasible) {
      std::cout << "set           " << to_string(r.best_set) << "\n";
      std::cout << "size          " << r.best_set.size() << "\n";
      std::cout << "objective     " << format_weight(r.objective) << "\n";
      print_certificate_lines(std::cout, r.certificate);
    } else {
      std::cout << "reason        " << r.infeasible_reason << "\n";
      if (r.graph_connectivity >= 0)
        std::cout << "graph connectivity " << r.graph_connectivity << "\n";
    }
    std::cout << "nodes         " << r.nodes_explored << "\n";
  }
  return status_exit(r.status);
}

// ---- pareto ----

struct ParetoArgs {
  std::string graph, weights;
  int k = 0, m = 1;
  bool all_sets = false;
  bool json = false;
};

int run_pareto(const ParetoArgs& a) {
  InstanceBundle bundle = load_bundle(a.graph, a.weights);
  ParetoFront front =
      pareto_front(bundle.graph, *bundle.weights, a.k, a.m, a.all_sets);
  if (a.json) {
    std::cout << render_json(describe_pareto(bundle.graph, a.k, a.m, front));
  } else {
    std::cout << "status   " << to_string(front.status) << "\n";
    if (front.status != SolveStatus::Infeasible) {
      std::cout << "points   " << front.points.size() << "\n";
      for (const auto& p : front.points) {
        std::cout << "  " << format_objective_vector(p) << "  {"
                  << to_string(p.set) << "}";
        if (a.all_sets && p.all_sets.size() > 1) {
          std::cout << "  also";
          for (std::size_t i = 1; i < p.all_sets.size(); ++i)
            std::cout << " {" << to_string(p.all_sets[i]) << "}";
        }
        std::cout << "\n";
      }
    } else {
      std::cout << "reason   " << front.infeasible_reason << "\n";
    }
  }
  return status_exit(front.status);
}

// ---- msest ----

struct MsestArgs {
  std::string graph, estimates, objective = "median-cohesion";
  int k = 0, m = 1;
  bool json = false;
};

int run_msest(const MsestArgs& a) {
  InstanceBundle bundle = load_bundle(a.graph, "", a.estimates);
  MsestObjective mode = a.objective == "integrated-distance"
                            ? MsestObjective::IntegratedDistance
                            : MsestObjective::MedianCohesion;
  MsestResult r = solve_msest(bundle.graph, *bundle.estimates, a.k, a.m, mode);
  if (a.json) {
    std::cout << render_json(describe_msest(bundle.graph, a.k, a.m, r));
  } else {
    std::cout << "objective mode " << to_string(r.objective_mode) << "\n";
    std::cout << "status         " << to_string(r.status) << "\n";
    if (r.status != SolveStatus::Infeasible) {
      std::cout << "set            " << to_string(r.best_set) << "\n";
      std::cout << "objective      " << r.objective << "\n";
      std::cout << "aggregate      " << to_string(r.median) << "\n";
      print_certificate_lines(std::cout, r.certificate);
    } else {
      std::cout << "reason         " << r.infeasible_reason << "\n";
    }
  }
  return status_exit(r.status);
}

// ---- check ----

struct CheckArgs {
  std::string graph, set;
  int k = 1, m = 1;
  bool json = false;
};

int run_check(const CheckArgs& a) {
  Graph g = read_graph_file(a.graph);
  VertexSubset b = parse_set_csv(a.set);
  require_subset_of(g, b);
  FeasibilityCertificate cert = check_feasible(g, b, a.k, a.m);
  if (a.json) {
    std::cout << render_json(describe_check(g, b, cert));
  } else {
    std::cout << "set           " << to_string(b) << "\n";
    std::cout << "requirement   k=" << a.k << ", m=" << a.m << "\n";
    print_certificate_lines(std::cout, cert);
    std::cout << "feasible      " << (cert.feasible ? "yes" : "no") << "\n";
  }
  return cert.feasible ? kExitSuccess : kExitInfeasible;
}

// ---- gen ----

struct GenArgs {
  std::string model, out;
  int n = 0;
  double p = -1.0, radius = -1.0;
  int core = 0, leaves = 0;
  std::uint64_t seed = 1;
  int weights_mu = 0, weight_lo = 1, weight_hi = 9;
  int est_l = 0, est_eta = 0;
  bool json = false;
};

int run_gen(const GenArgs& a) {
  DeterministicRng rng(a.seed);
  Graph g;
  GenReport report;
  report.model = a.model;
  report.seed = a.seed;

  if (a.model == "gnp") {
    if (a.n < 1 || a.p < 0.0)
      throw InputError("gnp needs --n and --p");
    g = gen_gnp(a.n, a.p, rng);
  } else if (a.model == "udg") {
    if (a.n < 1 || a.radius <= 0.0)
      throw InputError("udg needs --n and --radius");
    g = gen_unit_disk(a.n, a.radius, rng);
  } else {
    if (a.core < 1)
      throw InputError(a.model + " needs --core (and optionally --leaves)");
    Fixture fx = make_fixture(a.model, a.core, a.leaves);
    g = fx.graph;
    report.core = fx.core;
    report.core_k = fx.k;
    report.core_m = fx.m;
  }

  std::ostringstream gtext;
  write_graph(gtext, g);
  report.graph_file = a.out + ".graph";
  write_text_file(report.graph_file, gtext.str());

  if (a.weights_mu > 0) {
    auto rows = random_integer_weights(g.num_vertices(), a.weights_mu,
                                       a.weight_lo, a.weight_hi, rng);
    std::ostringstream wtext;
    write_weight_rows(wtext, rows);
    report.weights_file = a.out + ".weights";
    write_text_file(report.weights_file, wtext.str());
  }

  if (a.est_l > 0 || a.est_eta > 0) {
    if (a.est_l < 1 || a.est_eta < 1)
      throw InputError("estimates need both --est-l and --est-eta");
    EstimateTable est =
        random_estimates(g.num_vertices(), a.est_l, a.est_eta, rng);
    std::ostringstream etext;
    write_estimates(etext, est);
    report.estimates_file = a.out + ".estimates";
    write_text_file(report.estimates_file, etext.str());
  }

  if (a.json) {
    std::cout << render_json(describe_gen(g, report));
  } else {
    std::cout << "model   " << report.model << "\n";
    std::cout << "seed    " << report.seed << "\n";
    std::cout << "wrote   " << report.graph_file << " (" << g.num_vertices()
              << " vertices, " << g.num_edges() << " edges)\n";
    if (!report.weights_file.empty())
      std::cout << "wrote   " << report.weights_file << "\n";
    if (!report.estimates_file.empty())
      std::cout << "wrote   " << report.estimates_file << "\n";
    if (report.core) {
      std::cout << "core    " << to_string(*report.core) << "\n";
      std::cout << "meets   k=" << report.core_k << ", m=" << report.core_m
                << "\n";
    }
  }
  return kExitSuccess;
}

// ---- oracle ----

int run_oracle_solve(const SolveArgs& a) {
  InstanceBundle bundle = load_bundle(a.graph, a.weights);
  ProblemSpec spec = build_spec(a, bundle);
  SolveResult r = solve(bundle.graph, spec);
  const WeightTable* w = spec.weights ? &*spec.weights : nullptr;
  OracleBest ref = oracle_min_set(bundle.graph, spec.k, spec.m, w);

  bool agree;
  if (r.status == SolveStatus::Infeasible) {
    agree = !ref.feasible;
  } else {
    agree = ref.feasible &&
            compare_weights(r.objective, ref.objective) == 0 &&
            r.best_set == ref.set;
  }
  if (a.json) {
    std::cout << render_json(
        describe_oracle_solve(bundle.graph, spec, r, ref, agree));
  } else {
    std::cout << "solver     " << to_string(r.status);
    if (r.status != SolveStatus::Infeasible)
      std::cout << "  {" << to_string(r.best_set) << "}  objective "
                << format_weight(r.objective);
    std::cout << "\n";
    std::cout << "reference  " << (ref.feasible ? "optimal" : "infeasible");
    if (ref.feasible)
      std::cout << "  {" << to_string(ref.set) << "}  objective "
                << format_weight(ref.objective);
    std::cout << "\n";
    std::cout << "agree      " << (agree ? "yes" : "no") << "\n";
  }
  if (!agree) return kExitOracleMismatch;
  return status_exit(r.status);
}

int run_oracle_pareto(const ParetoArgs& a) {
  InstanceBundle bundle = load_bundle(a.graph, a.weights);
  ParetoFront front = pareto_front(bundle.graph, *bundle.weights, a.k, a.m);
  auto ref = oracle_pareto(bundle.graph, *bundle.weights, a.k, a.m);

  bool agree;
  if (front.status == SolveStatus::Infeasible) {
    agree = ref.empty();
  } else {
    agree = ref.size() == front.points.size();
    for (std::size_t i = 0; agree && i < ref.size(); ++i)
      agree = ref[i].objective_units == front.points[i].objective_units &&
              ref[i].set == front.points[i].set;
  }
  if (a.json) {
    std::cout << render_json(
        describe_oracle_pareto(bundle.graph, a.k, a.m, front, ref, agree));
  } else {
    std::cout << "solver     " << to_string(front.status) << ", "
              << front.points.size() << " points\n";
    std::cout << "reference  " << ref.size() << " points\n";
    std::cout << "agree      " << (agree ? "yes" : "no") << "\n";
  }
  if (!agree) return kExitOracleMismatch;
  return status_exit(front.status);
}

int run_oracle_msest(const MsestArgs& a) {
  InstanceBundle bundle = load_bundle(a.graph, "", a.estimates);
  MsestObjective mode = a.objective == "integrated-distance"
                            ? MsestObjective::IntegratedDistance
                            : MsestObjective::MedianCohesion;
  MsestResult r = solve_msest(bundle.graph, *bundle.estimates, a.k, a.m, mode);
  OracleMsest ref =
      oracle_msest(bundle.graph, *bundle.estimates, a.k, a.m, mode);

  bool agree;
  if (r.status == SolveStatus::Infeasible) {
    agree = !ref.feasible;
  } else {
    agree = ref.feasible && r.objective == ref.objective &&
            r.best_set == ref.set;
  }
  if (a.json) {
    std::cout << render_json(
        describe_oracle_msest(bundle.graph, a.k, a.m, r, ref, agree));
  } else {
    std::cout << "solver     " << to_string(r.status);
    if (r.status != SolveStatus::Infeasible)
      std::cout << "  {" << to_string(r.best_set) << "}  objective "
                << r.objective;
    std::cout << "\n";
    std::cout << "reference  " << (ref.feasible ? "optimal" : "infeasible");
    if (ref.feasible)
      std::cout << "  {" << to_string(ref.set) << "}  objective "
                << ref.objective;
    std::cout << "\n";
    std::cout << "agree      " << (agree ? "yes" : "no") << "\n";
  }
  if (!agree) return kExitOracleMismatch;
  return status_exit(r.status);
}

// ---- wiring ----

void add_solve_options(CLI::App* cmd, SolveArgs& a, bool oracle_mode) {
  cmd->add_option("--graph", a.graph, "graph file")->required();
  cmd->add_option("--weights", a.weights, "per-vertex weight file");
  cmd->add_option("--variant", a.variant, "problem variant")
      ->required()
      ->check(CLI::IsMember({"ds", "cds"}));
  cmd->add_option("--k", a.k, "connectivity level (cds only)");
  cmd->add_option("--m", a.m, "domination multiplicity");
  auto methods = oracle_mode
                     ? std::vector<std::string>{"exact", "bb"}
                     : std::vector<std::string>{"exact", "bb", "greedy",
                                                "two-phase"};
  cmd->add_option("--method", a.method, "solver")
      ->required()
      ->check(CLI::IsMember(methods));
  cmd->add_flag("--json", a.json, "machine-readable output");
}

void add_pareto_options(CLI::App* cmd, ParetoArgs& a, bool oracle_mode) {
  cmd->add_option("--graph", a.graph, "graph file")->required();
  cmd->add_option("--weights", a.weights, "vector weight file")->required();
  cmd->add_option("--k", a.k, "connectivity level (0 = none)");
  cmd->add_option("--m", a.m, "domination multiplicity");
  if (!oracle_mode)
    cmd->add_flag("--all-sets", a.all_sets, "list every optimal set per point");
  cmd->add_flag("--json", a.json, "machine-readable output");
}

void add_msest_options(CLI::App* cmd, MsestArgs& a) {
  cmd->add_option("--graph", a.graph, "graph file")->required();
  cmd->add_option("--estimates", a.estimates, "estimate file")->required();
  cmd->add_option("--k", a.k, "connectivity level (0 = none)");
  cmd->add_option("--m", a.m, "domination multiplicity");
  cmd->add_option("--objective", a.objective, "objective mode")
      ->check(CLI::IsMember({"median-cohesion", "integrated-distance"}));
  cmd->add_flag("--json", a.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating set optimization toolkit"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand(
      "solve", "minimum (weighted) dominating set variants");
  add_solve_options(solve_cmd, solve_args, false);

  ParetoArgs pareto_args;
  auto* pareto_cmd =
      app.add_subcommand("pareto", "efficient frontier under vector weights");
  add_pareto_options(pareto_cmd, pareto_args, false);

  MsestArgs msest_args;
  auto* msest_cmd = app.add_subcommand(
      "msest", "dominating set with ordinal estimate objective");
  add_msest_options(msest_cmd, msest_args);

  CheckArgs check_args;
  auto* check_cmd =
      app.add_subcommand("check", "certify a vertex set against (k, m)");
  check_cmd->add_option("--graph", check_args.graph, "graph file")->required();
  check_cmd->add_option("--set", check_args.set, "comma-separated vertex ids")
      ->required();
  check_cmd->add_option("--k", check_args.k, "connectivity level");
  check_cmd->add_option("--m", check_args.m, "domination multiplicity");
  check_cmd->add_flag("--json", check_args.json, "machine-readable output");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd->add_option("--model", gen_args.model, "gnp, udg, or a fixture family")
      ->required()
      ->check(CLI::IsMember({"gnp", "udg", "clique-backbone", "tree-backbone",
                             "ring-backbone", "ring-3dom"}));
  gen_cmd->add_option("--out", gen_args.out, "output path prefix")->required();
  gen_cmd->add_option("--n", gen_args.n, "vertex count (gnp, udg)");
  gen_cmd->add_option("--p", gen_args.p, "edge probability (gnp)");
  gen_cmd->add_option("--radius", gen_args.radius, "link radius (udg)");
  gen_cmd->add_option("--core", gen_args.core, "core size (fixtures)");
  gen_cmd->add_option("--leaves", gen_args.leaves,
                      "leaves per core vertex (fixtures)");
  gen_cmd->add_option("--seed", gen_args.seed, "generator seed");
  gen_cmd->add_option("--weights-mu", gen_args.weights_mu,
                      "also write this many weight columns");
  gen_cmd->add_option("--weight-lo", gen_args.weight_lo, "smallest weight");
  gen_cmd->add_option("--weight-hi", gen_args.weight_hi, "largest weight");
  gen_cmd->add_option("--est-l", gen_args.est_l, "also write estimates: scale");
  gen_cmd->add_option("--est-eta", gen_args.est_eta,
                      "also write estimates: cardinality");
  gen_cmd->add_flag("--json", gen_args.json, "machine-readable output");

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "rerun a command by brute force and diff the answers");
  oracle_cmd->require_subcommand(1);
  SolveArgs osolve_args;
  auto* osolve_cmd = oracle_cmd->add_subcommand("solve", "diff a solve run");
  add_solve_options(osolve_cmd, osolve_args, true);
  ParetoArgs opareto_args;
  auto* opareto_cmd = oracle_cmd->add_subcommand("pareto", "diff a frontier");
  add_pareto_options(opareto_cmd, opareto_args, true);
  MsestArgs omsest_args;
  auto* omsest_cmd =
      oracle_cmd->add_subcommand("msest", "diff an estimate-objective run");
  add_msest_options(omsest_cmd, omsest_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*pareto_cmd) return run_pareto(pareto_args);
    if (*msest_cmd) return run_msest(msest_args);
    if (*check_cmd) return run_check(check_args);
    if (*gen_cmd) return run_gen(gen_args);
    if (*oracle_cmd) {
      if (*osolve_cmd) return run_oracle_solve(osolve_args);
      if (*opareto_cmd) return run_oracle_pareto(opareto_args);
      if (*omsest_cmd) return run_oracle_msest(omsest_args);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  }
  return kExitInputError;
}
