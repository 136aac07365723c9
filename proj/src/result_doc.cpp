#include "domset/result_doc.hpp"

#include "domset/version.hpp"

namespace domset {

namespace {

ResultJson ids_of(const VertexSubset& b) {
  return ResultJson(b.members());
}

ResultJson head(const char* command, const Graph& g) {
  ResultJson doc;
  doc["schema"] = kResultSchemaVersion;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["vertices"] = g.num_vertices();
  doc["edges"] = g.num_edges();
  return doc;
}

// Integral exact weights become JSON integers, everything else a double.
ResultJson weight_json(const WeightValue& w) {
  if (w.integral()) return ResultJson(w.units / w.scale);
  return ResultJson(w.value());
}

void put_certificate(ResultJson& doc, const FeasibilityCertificate& cert) {
  doc["dominating"] = cert.dominating;
  doc["m_dominating"] = cert.m_dominating;
  doc["connected"] = cert.connected;
  doc["connectivity"] = cert.connectivity;
  ResultJson violations = ResultJson::array();
  for (const auto& v : cert.violations)
    violations.push_back({{"vertex", v.vertex}, {"reason", v.reason}});
  doc["violations"] = std::move(violations);
}

void put_timing(ResultJson& doc, double elapsed_ms) {
  doc["timing"] = ResultJson{{"elapsed_ms", elapsed_ms}};
}

ResultJson point_json(const ParetoPoint& p, bool with_all_sets) {
  ResultJson out;
  if (!p.objective_units.empty())
    out["objective"] = p.objective_units;
  else
    out["objective"] = p.objective;
  out["set"] = ids_of(p.set);
  if (with_all_sets) {
    ResultJson all = ResultJson::array();
    for (const auto& s : p.all_sets) all.push_back(ids_of(s));
    out["all_sets"] = std::move(all);
  }
  return out;
}

ResultJson estimate_json(const IntervalMultisetEstimate& e) {
  return ResultJson{{"l", e.l},
                    {"eta", e.eta},
                    {"counts", e.counts},
                    {"levels", e.sorted_levels()}};
}

}  // namespace

ResultJson describe_solve(const Graph& g, const ProblemSpec& spec,
                          const SolveResult& r) {
  ResultJson doc = head("solve", g);
  doc["variant"] = to_string(spec.variant);
  doc["method"] = to_string(r.method);
  doc["k"] = spec.k;
  doc["m"] = spec.m;
  doc["weighted"] = spec.weights.has_value();
  doc["status"] = to_string(r.status);
  if (r.status != SolveStatus::Infeasible) {
    doc["set"] = ids_of(r.best_set);
    doc["size"] = r.best_set.size();
    doc["objective"] = weight_json(r.objective);
    put_certificate(doc, r.certificate);
  } else {
    doc["infeasible_reason"] = r.infeasible_reason;
    if (r.graph_connectivity >= 0)
      doc["graph_connectivity"] = r.graph_connectivity;
  }
  doc["nodes_explored"] = r.nodes_explored;
  put_timing(doc, r.elapsed_ms);
  return doc;
}

ResultJson describe_pareto(const Graph& g, int k, int m,
                           const ParetoFront& front) {
  ResultJson doc = head("pareto", g);
  doc["k"] = k;
  doc["m"] = m;
  doc["criteria"] = front.mu;
  doc["status"] = to_string(front.status);
  if (front.status != SolveStatus::Infeasible) {
    bool with_all = false;
    for (const auto& p : front.points)
      if (!p.all_sets.empty()) with_all = true;
    ResultJson points = ResultJson::array();
    for (const auto& p : front.points) points.push_back(point_json(p, with_all));
    doc["points"] = std::move(points);
    doc["count"] = static_cast<int>(front.points.size());
  } else {
    doc["infeasible_reason"] = front.infeasible_reason;
    if (front.graph_connectivity >= 0)
      doc["graph_connectivity"] = front.graph_connectivity;
  }
  doc["nodes_explored"] = front.nodes_explored;
  put_timing(doc, front.elapsed_ms);
  return doc;
}

ResultJson describe_msest(const Graph& g, int k, int m, const MsestResult& r) {
  ResultJson doc = head("msest", g);
  doc["k"] = k;
  doc["m"] = m;
  doc["objective_mode"] = to_string(r.objective_mode);
  doc["status"] = to_string(r.status);
  if (r.status != SolveStatus::Infeasible) {
    doc["set"] = ids_of(r.best_set);
    doc["size"] = r.best_set.size();
    doc["objective"] = r.objective;
    doc["median"] = estimate_json(r.median);
    put_certificate(doc, r.certificate);
  } else {
    doc["infeasible_reason"] = r.infeasible_reason;
    if (r.graph_connectivity >= 0)
      doc["graph_connectivity"] = r.graph_connectivity;
  }
  doc["nodes_explored"] = r.nodes_explored;
  put_timing(doc, r.elapsed_ms);
  return doc;
}

ResultJson describe_check(const Graph& g, const VertexSubset& b,
                          const FeasibilityCertificate& cert) {
  ResultJson doc = head("check", g);
  doc["set"] = ids_of(b);
  doc["size"] = b.size();
  doc["k"] = cert.k_required;
  doc["m"] = cert.m_checked;
  doc["feasible"] = cert.feasible;
  put_certificate(doc, cert);
  put_timing(doc, 0.0);
  return doc;
}

ResultJson describe_gen(const Graph& g, const GenReport& report) {
  ResultJson doc = head("gen", g);
  doc["model"] = report.model;
  doc["seed"] = report.seed;
  doc["graph_file"] = report.graph_file;
  if (!report.weights_file.empty()) doc["weights_file"] = report.weights_file;
  if (!report.estimates_file.empty())
    doc["estimates_file"] = report.estimates_file;
  if (report.core) {
    doc["core"] = ids_of(*report.core);
    doc["core_k"] = report.core_k;
    doc["core_m"] = report.core_m;
  }
  put_timing(doc, 0.0);
  return doc;
}

ResultJson describe_oracle_solve(const Graph& g, const ProblemSpec& spec,
                                 const SolveResult& solver,
                                 const OracleBest& reference, bool agree) {
  ResultJson doc = head("oracle", g);
  doc["mode"] = "solve";
  doc["variant"] = to_string(spec.variant);
  doc["k"] = spec.k;
  doc["m"] = spec.m;
  doc["agree"] = agree;
  doc["solver_status"] = to_string(solver.status);
  doc["reference_status"] =
      reference.feasible ? to_string(SolveStatus::Optimal)
                         : to_string(SolveStatus::Infeasible);
  if (solver.status != SolveStatus::Infeasible) {
    doc["solver_set"] = ids_of(solver.best_set);
    doc["solver_objective"] = weight_json(solver.objective);
  }
  if (reference.feasible) {
    doc["reference_set"] = ids_of(reference.set);
    doc["reference_objective"] = weight_json(reference.objective);
  }
  put_timing(doc, solver.elapsed_ms);
  return doc;
}

ResultJson describe_oracle_pareto(const Graph& g, int k, int m,
                                  const ParetoFront& solver,
                                  const std::vector<ParetoPoint>& reference,
                                  bool agree) {
  ResultJson doc = head("oracle", g);
  doc["mode"] = "pareto";
  doc["k"] = k;
  doc["m"] = m;
  doc["agree"] = agree;
  doc["solver_status"] = to_string(solver.status);
  doc["reference_status"] = reference.empty()
                                ? to_string(SolveStatus::Infeasible)
                                : to_string(SolveStatus::Optimal);
  ResultJson sp = ResultJson::array();
  for (const auto& p : solver.points) sp.push_back(point_json(p, false));
  doc["solver_points"] = std::move(sp);
  ResultJson rp = ResultJson::array();
  for (const auto& p : reference) rp.push_back(point_json(p, false));
  doc["reference_points"] = std::move(rp);
  put_timing(doc, solver.elapsed_ms);
  return doc;
}

ResultJson describe_oracle_msest(const Graph& g, int k, int m,
                                 const MsestResult& solver,
                                 const OracleMsest& reference, bool agree) {
  ResultJson doc = head("oracle", g);
  doc["mode"] = "msest";
  doc["k"] = k;
  doc["m"] = m;
  doc["objective_mode"] = to_string(solver.objective_mode);
  doc["agree"] = agree;
  doc["solver_status"] = to_string(solver.status);
  doc["reference_status"] =
      reference.feasible ? to_string(SolveStatus::Optimal)
                         : to_string(SolveStatus::Infeasible);
  if (solver.status != SolveStatus::Infeasible) {
    doc["solver_set"] = ids_of(solver.best_set);
    doc["solver_objective"] = solver.objective;
  }
  if (reference.feasible) {
    doc["reference_set"] = ids_of(reference.set);
    doc["reference_objective"] = reference.objective;
  }
  put_timing(doc, solver.elapsed_ms);
  return doc;
}

std::string render_json(const ResultJson& doc) { return doc.dump(2) + "\n"; }

}  // namespace domset
