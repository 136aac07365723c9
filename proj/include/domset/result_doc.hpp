#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "domset/generate.hpp"
#include "domset/instance_io.hpp"
#include "domset/msest.hpp"
#include "domset/oracle.hpp"
#include "domset/pareto.hpp"
#include "domset/solve.hpp"

namespace domset {

using ResultJson = nlohmann::ordered_json;

// Versioned flat JSON documents, one per subcommand. Every document carries
// schema/tool/version/command up front and isolates wall-clock fields in a
// trailing "timing" object, so output comparison can simply drop that key.
// Sets are sorted ascending id lists; exact integral objectives are emitted
// as JSON integers.

ResultJson describe_solve(const Graph& g, const ProblemSpec& spec,
                          const SolveResult& r);

ResultJson describe_pareto(const Graph& g, int k, int m,
                           const ParetoFront& front);

ResultJson describe_msest(const Graph& g, int k, int m, const MsestResult& r);

ResultJson describe_check(const Graph& g, const VertexSubset& b,
                          const FeasibilityCertificate& cert);

struct GenReport {
  std::string model;  // gnp | udg | fixture family
  std::uint64_t seed = 0;
  std::string graph_file;
  std::string weights_file;
  std::string estimates_file;
  std::optional<VertexSubset> core;
  int core_k = 0;
  int core_m = 0;
};

ResultJson describe_gen(const Graph& g, const GenReport& report);

ResultJson describe_oracle_solve(const Graph& g, const ProblemSpec& spec,
                                 const SolveResult& solver,
                                 const OracleBest& reference, bool agree);

ResultJson describe_oracle_pareto(const Graph& g, int k, int m,
                                  const ParetoFront& solver,
                                  const std::vector<ParetoPoint>& reference,
                                  bool agree);

ResultJson describe_oracle_msest(const Graph& g, int k, int m,
                                 const MsestResult& solver,
                                 const OracleMsest& reference, bool agree);

// dump(2) plus a trailing newline; the single rendering used by the CLI.
std::string render_json(const ResultJson& doc);

}  // namespace domset
