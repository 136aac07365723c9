#pragma once

#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/solve.hpp"
#include "domset/weights.hpp"

namespace domset {

// One efficient point: objective vector plus the canonical set attaining it.
// When requested, all optimizing sets for the vector are kept too.
struct ParetoPoint {
  std::vector<double> objective;          // display values
  std::vector<long long> objective_units; // exact values (empty when inexact)
  VertexSubset set;
  std::vector<VertexSubset> all_sets;

  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

struct ParetoFront {
  SolveStatus status = SolveStatus::Infeasible;
  int mu = 0;
  std::vector<ParetoPoint> points;  // sorted by vector, mutually non-dominated
  long long nodes_explored = 0;
  double elapsed_ms = 0.0;
  std::string infeasible_reason;
  int graph_connectivity = -1;
};

// p dominates q: p <= q componentwise and p != q (minimization). Vectors must
// share length.
bool dominates(const std::vector<long long>& p, const std::vector<long long>& q);
bool dominates(const std::vector<double>& p, const std::vector<double>& q);

inline constexpr int kParetoVertexCap = 20;

// Complete efficient frontier of vertex subsets under componentwise-summed
// vector weights. k = 0 ranges over plain m-dominating sets; k >= 1 adds the
// connectivity rule. One canonical representative per efficient vector;
// collect_all_sets keeps every optimizer.
ParetoFront pareto_front(const Graph& g, const WeightVectorTable& w, int k,
                         int m, bool collect_all_sets = false);

}  // namespace domset
