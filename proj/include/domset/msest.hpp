#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domset/feasibility.hpp"
#include "domset/graph.hpp"
#include "domset/solve.hpp"
#include "domset/weights.hpp"

namespace domset {

// Ordinal assessment over levels 1..l (lower level = better), recorded in
// position form: counts[i] elements sit at level i+1, counts sum to eta.
// The occupied levels must form one contiguous range ("interval" condition),
// so {1,2} is a valid spread while {1,3} is not.
struct IntervalMultisetEstimate {
  int l = 1;
  int eta = 1;
  std::vector<int> counts;

  static IntervalMultisetEstimate from_counts(int l, std::vector<int> counts);
  // Multiset notation: levels lists each element's level, e.g. {1,2,2}.
  static IntervalMultisetEstimate from_levels(int l, std::vector<int> levels);

  std::vector<int> sorted_levels() const;

  friend bool operator==(const IntervalMultisetEstimate&,
                         const IntervalMultisetEstimate&) = default;
};

// Canonical estimate order: more mass at better (lower) levels first.
bool canonical_estimate_less(const IntervalMultisetEstimate& a,
                             const IntervalMultisetEstimate& b);

std::string to_string(const IntervalMultisetEstimate& e);

// Number of multisets of cardinality eta over l levels:
// l (l+1) ... (l+eta-1) / eta!. Exact; overflow past 64 bits is a resource
// error.
unsigned long long multiset_coefficient(int l, int eta);

inline constexpr int kEstimateScaleCap = 10;        // max l
inline constexpr int kEstimateCardinalityCap = 10;  // max eta

// All valid estimates for (l, eta) in canonical order.
std::vector<IntervalMultisetEstimate> enumerate_interval_estimates(int l,
                                                                   int eta);

// Componentwise sum of position forms. The result need not satisfy the
// interval condition; `interval` records whether it does.
struct IntegratedEstimate {
  int l = 1;
  long long eta = 0;
  std::vector<long long> counts;
  bool interval = false;

  friend bool operator==(const IntegratedEstimate&,
                         const IntegratedEstimate&) = default;
};

IntegratedEstimate integrate(const std::vector<IntervalMultisetEstimate>& es);

// Minimal one-step-change decomposition taking the first estimate to the
// second: improvement counts moves to better levels, degradation moves to
// worse ones. magnitude() is a metric.
struct Proximity {
  long long improvement = 0;   // delta-minus
  long long degradation = 0;   // delta-plus
  long long magnitude() const { return improvement + degradation; }

  friend bool operator==(const Proximity&, const Proximity&) = default;
};

Proximity proximity(const IntervalMultisetEstimate& e1,
                    const IntervalMultisetEstimate& e2);

struct MedianResult {
  IntervalMultisetEstimate median;
  long long cost = 0;

  friend bool operator==(const MedianResult&, const MedianResult&) = default;
};

// Estimate minimizing the summed proximity magnitude to every member of E,
// searched over all valid estimates (ties: canonical order).
MedianResult generalized_median(const std::vector<IntervalMultisetEstimate>& E);

// Same objective restricted to members of E.
MedianResult set_median(const std::vector<IntervalMultisetEstimate>& E);

// Uniform assessment scale shared by a table of estimates, one per vertex.
struct EstimateTable {
  int l = 1;
  int eta = 1;
  std::vector<IntervalMultisetEstimate> rows;

  int size() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const EstimateTable&, const EstimateTable&) = default;
};

enum class QuantizePolicy { EqualWidth };

// Compress mu-criteria weights into estimates with eta = mu: each criterion
// is binned into l equal-width levels over its observed range (lower weight
// = better level; a constant criterion maps to level 1), then the raw
// multiset is repaired to the nearest valid estimate (fewest one-step moves,
// ties prefer moves toward better levels, then canonical order).
EstimateTable quantize_weights(const WeightVectorTable& w, int l,
                               QuantizePolicy policy = QuantizePolicy::EqualWidth);

enum class MsestObjective { MedianCohesion, IntegratedDistance };

std::string to_string(MsestObjective o);

struct MsestResult {
  SolveStatus status = SolveStatus::Infeasible;
  VertexSubset best_set;
  long long objective = 0;
  IntervalMultisetEstimate median;  // aggregate estimate of the best set
  FeasibilityCertificate certificate;
  MsestObjective objective_mode = MsestObjective::MedianCohesion;
  long long nodes_explored = 0;
  double elapsed_ms = 0.0;
  std::string infeasible_reason;
  int graph_connectivity = -1;
};

inline constexpr int kMsestVertexCap = 18;

// Minimum-cohesion dominating set: among feasible sets for (k, m), minimize
// the generalized-median cost of the members' estimates (ties: smaller set,
// then canonical order). The integrated-distance mode instead minimizes the
// proximity magnitude between the per-member-normalized integrated estimate
// and the all-best ideal.
MsestResult solve_msest(const Graph& g, const EstimateTable& est, int k, int m,
                        MsestObjective objective = MsestObjective::MedianCohesion);

}  // namespace domset
