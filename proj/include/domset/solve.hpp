#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domset/feasibility.hpp"
#include "domset/graph.hpp"
#include "domset/weights.hpp"

namespace domset {

enum class Variant { DS, CDS };
enum class Method { ExactEnum, BranchBound, Greedy, TwoPhase };
enum class SolveStatus { Optimal, Feasible, Infeasible };

std::string to_string(Variant v);
std::string to_string(Method m);
std::string to_string(SolveStatus s);

struct ProblemSpec {
  Variant variant = Variant::DS;
  int k = 1;  // connectivity level; ignored for DS
  int m = 1;  // domination multiplicity
  std::optional<WeightTable> weights;
  Method method = Method::ExactEnum;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  VertexSubset best_set;
  WeightValue objective;
  FeasibilityCertificate certificate;
  Method method = Method::ExactEnum;
  long long nodes_explored = 0;
  double elapsed_ms = 0.0;
  std::string infeasible_reason;
  // Vertex connectivity of the whole graph, reported with infeasible
  // k-connected solves.
  int graph_connectivity = -1;
};

// Exhaustive enumeration refuses instances above this size.
inline constexpr int kExactEnumVertexCap = 26;
inline constexpr long long kDefaultNodeBudget = 20'000'000;

// Branch-and-bound node cap; the environment variable overrides the default.
long long node_budget_from_env();
inline constexpr const char* kNodeBudgetEnvVar = "DOMSET_NODE_BUDGET";

// Dispatches on spec.method after validating the spec (k >= 2 requires CDS,
// weights must match the vertex count, method/variant pairings).
SolveResult solve(const Graph& g, const ProblemSpec& spec);

SolveResult solve_min_ds(const Graph& g);
SolveResult solve_min_cds(const Graph& g);
SolveResult solve_min_weighted(const Graph& g, Variant variant,
                               const WeightTable& w);
SolveResult solve_min_kmcds(const Graph& g, int k, int m,
                            const std::optional<WeightTable>& w = {});

// Repeatedly adds the vertex that helps the most vertices still short of m
// dominators (ties: lowest id). Always terminates with a feasible set.
SolveResult greedy_ds(const Graph& g, int m);

// Builds a maximal independent set, then merges its induced components with
// shortest connecting paths until the set is connected.
SolveResult two_phase_cds(const Graph& g);

enum class MisMode { Exact, MaximalGreedy };
// Exact mode: maximum independent set (canonical tie-break), n capped at 26.
// MaximalGreedy: lowest-id-first maximal independent set. Both results are
// verified to dominate the graph before returning.
VertexSubset max_independent_set(const Graph& g, MisMode mode = MisMode::Exact);

struct MaxLeafResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<std::pair<int, int>> tree_edges;
  int leaf_count = 0;
  std::string infeasible_reason;
};

inline constexpr int kMaxLeafVertexCap = 14;

// Exact maximum-leaf spanning tree by enumerating candidate interior sets
// and building an explicit tree for each. Requires n >= 3 and n <= 14.
MaxLeafResult max_leaf_spanning_tree(const Graph& g);

}  // namespace domset
