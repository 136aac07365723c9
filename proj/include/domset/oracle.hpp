#pragma once

#include <vector>

#include "domset/graph.hpp"
#include "domset/msest.hpp"
#include "domset/pareto.hpp"
#include "domset/weights.hpp"

namespace domset {

// Reference answers by unpruned exhaustive scan. Everything here is written
// against the plain adjacency lists with its own domination, connectivity,
// and separator checks, deliberately sharing no search or pruning machinery
// with the solvers, so agreement between the two is meaningful evidence.

inline constexpr int kOracleVertexCap = 20;

struct OracleBest {
  bool feasible = false;
  VertexSubset set;
  WeightValue objective;
};

// Minimum-weight (unit weights when w is null) set satisfying (k, m);
// ties by canonical set order.
OracleBest oracle_min_set(const Graph& g, int k, int m,
                          const WeightTable* w = nullptr);

// Efficient frontier under exact vector weights; w.exact is required.
// Points sorted by objective vector, canonical representative sets.
std::vector<ParetoPoint> oracle_pareto(const Graph& g,
                                       const WeightVectorTable& w, int k,
                                       int m);

struct OracleMsest {
  bool feasible = false;
  VertexSubset set;
  long long objective = 0;
};

OracleMsest oracle_msest(const Graph& g, const EstimateTable& est, int k,
                         int m, MsestObjective objective);

}  // namespace domset
