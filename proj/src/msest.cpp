#include "domset/msest.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "domset/detail/bitgraph.hpp"
#include "domset/errors.hpp"

namespace domset {

namespace {

using detail::BitGraph;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_scale(int l, int eta) {
  if (l < 1) throw InputError("scale length l must be >= 1");
  if (eta < 1) throw InputError("estimate cardinality must be >= 1");
}

bool contiguous_support(const std::vector<int>& counts) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
    if (counts[i] < 0) return false;
    if (counts[i] > 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return false;
  for (int i = first; i <= last; ++i)
    if (counts[i] == 0) return false;
  return true;
}

// Proximity on raw position forms; callers guarantee matching (l, eta).
Proximity proximity_counts(const std::vector<int>& c1,
                           const std::vector<int>& c2) {
  auto expand = [](const std::vector<int>& counts) {
    std::vector<int> levels;
    for (int i = 0; i < static_cast<int>(counts.size()); ++i)
      levels.insert(levels.end(), counts[i], i + 1);
    return levels;
  };
  auto s1 = expand(c1), s2 = expand(c2);
  Proximity p;
  for (std::size_t j = 0; j < s1.size(); ++j) {
    if (s2[j] > s1[j]) p.degradation += s2[j] - s1[j];
    if (s1[j] > s2[j]) p.improvement += s1[j] - s2[j];
  }
  return p;
}

void require_uniform(const std::vector<IntervalMultisetEstimate>& E) {
  if (E.empty()) throw InputError("estimate list is empty");
  for (const auto& e : E) {
    if (e.l != E.front().l || e.eta != E.front().eta)
      throw InputError("estimates mix scales: (" + std::to_string(e.l) + "," +
                       std::to_string(e.eta) + ") vs (" +
                       std::to_string(E.front().l) + "," +
                       std::to_string(E.front().eta) + ")");
  }
}

// Nearest valid estimate to an arbitrary position form: fewest one-step
// moves, ties prefer improving moves, then canonical order. Candidates must
// be enumerate_interval_estimates(l, eta) for the matching scale.
const IntervalMultisetEstimate& repair_with(
    const std::vector<IntervalMultisetEstimate>& candidates,
    const std::vector<int>& counts) {
  const IntervalMultisetEstimate* best = nullptr;
  Proximity best_p;
  for (const auto& cand : candidates) {
    Proximity p = proximity_counts(counts, cand.counts);
    if (!best || p.magnitude() < best_p.magnitude() ||
        (p.magnitude() == best_p.magnitude() &&
         p.improvement > best_p.improvement)) {
      best = &cand;
      best_p = p;
    }
  }
  return *best;  // enumeration is never empty for valid (l, eta)
}

}  // namespace

IntervalMultisetEstimate IntervalMultisetEstimate::from_counts(
    int l, std::vector<int> counts) {
  require_scale(l, 1);
  if (static_cast<int>(counts.size()) != l)
    throw InputError("position form has " + std::to_string(counts.size()) +
                     " entries for scale length " + std::to_string(l));
  long long total = 0;
  for (int c : counts) {
    if (c < 0) throw InputError("position form entries must be nonnegative");
    total += c;
  }
  if (total < 1) throw InputError("estimate cardinality must be >= 1");
  if (!contiguous_support(counts))
    throw InputError("estimate must cover a contiguous range of levels");
  IntervalMultisetEstimate e;
  e.l = l;
  e.eta = static_cast<int>(total);
  e.counts = std::move(counts);
  return e;
}

IntervalMultisetEstimate IntervalMultisetEstimate::from_levels(
    int l, std::vector<int> levels) {
  require_scale(l, 1);
  std::vector<int> counts(l, 0);
  for (int level : levels) {
    if (level < 1 || level > l)
      throw InputError("level " + std::to_string(level) +
                       " outside scale 1.." + std::to_string(l));
    ++counts[level - 1];
  }
  return from_counts(l, std::move(counts));
}

std::vector<int> IntervalMultisetEstimate::sorted_levels() const {
  std::vector<int> levels;
  for (int i = 0; i < l; ++i) levels.insert(levels.end(), counts[i], i + 1);
  return levels;
}

bool canonical_estimate_less(const IntervalMultisetEstimate& a,
                             const IntervalMultisetEstimate& b) {
  return a.counts > b.counts;  // more mass at better levels first
}

std::string to_string(const IntervalMultisetEstimate& e) {
  std::string out = "{";
  bool first = true;
  for (int level : e.sorted_levels()) {
    if (!first) out += ',';
    out += std::to_string(level);
    first = false;
  }
  return out + "}";
}

unsigned long long multiset_coefficient(int l, int eta) {
  require_scale(l, eta);
  // Running product C(l-1+i, i) stays integral at every step.
  unsigned long long result = 1;
  for (int i = 1; i <= eta; ++i) {
    unsigned __int128 next =
        static_cast<unsigned __int128>(result) * (l - 1 + i);
    next /= i;
    if (next > std::numeric_limits<unsigned long long>::max())
      throw ResourceError("multiset coefficient overflows 64 bits for l=" +
                          std::to_string(l) + ", eta=" + std::to_string(eta));
    result = static_cast<unsigned long long>(next);
  }
  return result;
}

std::vector<IntervalMultisetEstimate> enumerate_interval_estimates(int l,
                                                                   int eta) {
  require_scale(l, eta);
  if (l > kEstimateScaleCap || eta > kEstimateCardinalityCap)
    throw ResourceError("estimate enumeration caps at l=" +
                        std::to_string(kEstimateScaleCap) +
                        ", eta=" + std::to_string(kEstimateCardinalityCap));
  std::vector<IntervalMultisetEstimate> out;
  for (int lo = 1; lo <= l; ++lo) {
    for (int hi = lo; hi <= l; ++hi) {
      int width = hi - lo + 1;
      if (eta < width) continue;
      // Compositions of eta into `width` positive parts.
      std::vector<int> parts(width, 1);
      parts[0] = eta - width + 1;
      while (true) {
        std::vector<int> counts(l, 0);
        for (int i = 0; i < width; ++i) counts[lo - 1 + i] = parts[i];
        IntervalMultisetEstimate e;
        e.l = l;
        e.eta = eta;
        e.counts = std::move(counts);
        out.push_back(std::move(e));
        int i = 0;
        while (i < width - 1 && parts[i] == 1) ++i;
        if (i == width - 1) break;
        int spare = parts[i] - 1;
        parts[i] = 1;
        parts[i + 1] += 1;
        parts[0] = spare;
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_estimate_less);
  return out;
}

IntegratedEstimate integrate(const std::vector<IntervalMultisetEstimate>& es) {
  if (es.empty()) throw InputError("estimate list is empty");
  int l = es.front().l;
  IntegratedEstimate sum;
  sum.l = l;
  sum.counts.assign(l, 0);
  for (const auto& e : es) {
    if (e.l != l)
      throw InputError("estimates mix scale lengths: " + std::to_string(e.l) +
                       " vs " + std::to_string(l));
    for (int i = 0; i < l; ++i) sum.counts[i] += e.counts[i];
    sum.eta += e.eta;
  }
  int first = -1, last = -1;
  bool gap = false;
  for (int i = 0; i < l; ++i) {
    if (sum.counts[i] > 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  for (int i = first; i <= last; ++i)
    if (sum.counts[i] == 0) gap = true;
  sum.interval = !gap;
  return sum;
}

Proximity proximity(const IntervalMultisetEstimate& e1,
                    const IntervalMultisetEstimate& e2) {
  if (e1.l != e2.l || e1.eta != e2.eta)
    throw InputError("estimates mix scales: (" + std::to_string(e1.l) + "," +
                     std::to_string(e1.eta) + ") vs (" + std::to_string(e2.l) +
                     "," + std::to_string(e2.eta) + ")");
  return proximity_counts(e1.counts, e2.counts);
}

MedianResult generalized_median(const std::vector<IntervalMultisetEstimate>& E) {
  require_uniform(E);
  auto candidates = enumerate_interval_estimates(E.front().l, E.front().eta);
  MedianResult best;
  bool have = false;
  for (const auto& cand : candidates) {
    long long cost = 0;
    for (const auto& e : E) cost += proximity(cand, e).magnitude();
    if (!have || cost < best.cost) {  // candidates arrive in canonical order
      have = true;
      best.median = cand;
      best.cost = cost;
    }
  }
  return best;
}

MedianResult set_median(const std::vector<IntervalMultisetEstimate>& E) {
  require_uniform(E);
  MedianResult best;
  bool have = false;
  for (const auto& cand : E) {
    long long cost = 0;
    for (const auto& e : E) cost += proximity(cand, e).magnitude();
    if (!have || cost < best.cost ||
        (cost == best.cost && canonical_estimate_less(cand, best.median))) {
      have = true;
      best.median = cand;
      best.cost = cost;
    }
  }
  return best;
}

EstimateTable quantize_weights(const WeightVectorTable& w, int l,
                               QuantizePolicy policy) {
  if (policy != QuantizePolicy::EqualWidth)
    throw InputError("unknown quantization policy");
  if (l < 2) throw InputError("quantization needs at least 2 levels");
  if (l > kEstimateScaleCap)
    throw ResourceError("estimate scale caps at l=" +
                        std::to_string(kEstimateScaleCap));
  if (w.size() < 1) throw InputError("weight table has no rows");
  if (w.mu < 1) throw InputError("weight table has no criteria");
  if (w.mu > kEstimateCardinalityCap)
    throw ResourceError("estimate cardinality caps at eta=" +
                        std::to_string(kEstimateCardinalityCap));

  std::vector<double> lo(w.mu), hi(w.mu);
  for (int j = 0; j < w.mu; ++j) {
    lo[j] = hi[j] = w.raw[0][j];
    for (int i = 1; i < w.size(); ++i) {
      lo[j] = std::min(lo[j], w.raw[i][j]);
      hi[j] = std::max(hi[j], w.raw[i][j]);
    }
  }

  EstimateTable table;
  table.l = l;
  table.eta = w.mu;
  std::vector<IntervalMultisetEstimate> repaired;
  for (int i = 0; i < w.size(); ++i) {
    std::vector<int> counts(l, 0);
    for (int j = 0; j < w.mu; ++j) {
      int level = 1;
      if (hi[j] > lo[j]) {
        double frac = (w.raw[i][j] - lo[j]) / (hi[j] - lo[j]);
        level = 1 + static_cast<int>(frac * l);
        level = std::clamp(level, 1, l);
      }
      ++counts[level - 1];
    }
    if (contiguous_support(counts)) {
      table.rows.push_back(
          IntervalMultisetEstimate::from_counts(l, std::move(counts)));
    } else {
      if (repaired.empty()) repaired = enumerate_interval_estimates(l, w.mu);
      table.rows.push_back(repair_with(repaired, counts));
    }
  }
  return table;
}

std::string to_string(MsestObjective o) {
  return o == MsestObjective::MedianCohesion ? "median-cohesion"
                                             : "integrated-distance";
}

MsestResult solve_msest(const Graph& g, const EstimateTable& est, int k, int m,
                        MsestObjective objective) {
  auto t0 = Clock::now();
  if (g.empty()) throw InputError("graph has no vertices");
  if (m < 1) throw InputError("domination multiplicity m must be >= 1");
  if (k < 0) throw InputError("connectivity requirement k must be >= 0");
  int n = g.num_vertices();
  if (n > kMsestVertexCap)
    throw ResourceError("estimate-objective search caps at " +
                        std::to_string(kMsestVertexCap) +
                        " vertices, instance has " + std::to_string(n));
  if (est.size() != n)
    throw InputError("estimate table has " + std::to_string(est.size()) +
                     " rows for a graph with " + std::to_string(n) +
                     " vertices");
  for (const auto& row : est.rows) {
    if (row.l != est.l || row.eta != est.eta)
      throw InputError("estimate table rows must share the table scale");
  }

  BitGraph bg = BitGraph::from(g);
  auto candidates = enumerate_interval_estimates(est.l, est.eta);
  // Subset scan times candidate scan; refuse combinations that cannot
  // finish in reasonable time even though each cap holds individually.
  if (static_cast<double>(candidates.size()) * std::ldexp(1.0, n) > 1e9)
    throw ResourceError(
        "estimate-objective search too large: " +
        std::to_string(candidates.size()) + " candidate estimates over 2^" +
        std::to_string(n) + " subsets");
  // cost_by[c][v]: proximity magnitude from candidate c to vertex v's row.
  std::vector<std::vector<long long>> cost_by(
      candidates.size(), std::vector<long long>(n + 1, 0));
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (int v = 1; v <= n; ++v)
      cost_by[c][v] = proximity(candidates[c], est.rows[v - 1]).magnitude();

  IntervalMultisetEstimate ideal;
  if (objective == MsestObjective::IntegratedDistance) {
    std::vector<int> counts(est.l, 0);
    counts[0] = est.eta;
    ideal = IntervalMultisetEstimate::from_counts(est.l, std::move(counts));
  }

  auto evaluate = [&](std::uint64_t mask, IntervalMultisetEstimate& aggregate) {
    if (objective == MsestObjective::MedianCohesion) {
      long long best_cost = 0;
      std::size_t best_c = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        long long cost = 0;
        for (std::uint64_t rest = mask; rest;) {
          int v = std::countr_zero(rest) + 1;
          rest &= rest - 1;
          cost += cost_by[c][v];
        }
        if (c == 0 || cost < best_cost) {
          best_cost = cost;
          best_c = c;
        }
      }
      aggregate = candidates[best_c];
      return best_cost;
    }
    // Integrated distance: sum the members' position forms, round back to
    // one member's cardinality by largest remainder (ties toward better
    // levels), repair, and measure the distance to the ideal.
    int size = std::popcount(mask);
    std::vector<long long> sum(est.l, 0);
    for (std::uint64_t rest = mask; rest;) {
      int v = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      for (int i = 0; i < est.l; ++i) sum[i] += est.rows[v - 1].counts[i];
    }
    std::vector<int> scaled(est.l, 0);
    std::vector<std::pair<long long, int>> remainder;  // (-remainder, level)
    int assigned = 0;
    for (int i = 0; i < est.l; ++i) {
      scaled[i] = static_cast<int>(sum[i] / size);
      assigned += scaled[i];
      remainder.emplace_back(-(sum[i] % size), i);
    }
    std::sort(remainder.begin(), remainder.end());
    for (int i = 0; assigned < est.eta; ++i, ++assigned)
      ++scaled[remainder[i % est.l].second];
    aggregate = contiguous_support(scaled)
                    ? IntervalMultisetEstimate::from_counts(est.l, scaled)
                    : repair_with(candidates, scaled);
    return proximity(aggregate, ideal).magnitude();
  };

  bool found = false;
  long long best_objective = 0;
  std::uint64_t best_mask = 0;
  IntervalMultisetEstimate best_aggregate;
  long long nodes = 0;
  std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ++nodes;
    if (!detail::mask_m_dominated(bg, mask, m)) continue;
    if (k >= 1) {
      if (!detail::mask_connected(bg, mask)) continue;
      if (k >= 2) {
        if (std::popcount(mask) < 2) continue;
        if (subset_connectivity(g, detail::subset_from_mask(mask)) < k)
          continue;
      }
    }
    IntervalMultisetEstimate aggregate;
    long long obj = evaluate(mask, aggregate);
    bool better = !found;
    if (found) {
      if (obj != best_objective) {
        better = obj < best_objective;
      } else if (std::popcount(mask) != std::popcount(best_mask)) {
        better = std::popcount(mask) < std::popcount(best_mask);
      } else {
        better = detail::compare_masks_canonical(mask, best_mask) < 0;
      }
    }
    if (better) {
      found = true;
      best_objective = obj;
      best_mask = mask;
      best_aggregate = aggregate;
    }
  }

  MsestResult r;
  r.objective_mode = objective;
  r.nodes_explored = nodes;
  if (!found) {
    r.status = SolveStatus::Infeasible;
    r.infeasible_reason = "no subset satisfies the (k=" + std::to_string(k) +
                          ", m=" + std::to_string(m) + ") requirement";
    if (k >= 1)
      r.graph_connectivity = subset_connectivity(g, VertexSubset::full(n));
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  r.status = SolveStatus::Optimal;
  r.best_set = detail::subset_from_mask(best_mask);
  r.objective = best_objective;
  r.median = best_aggregate;
  r.certificate = check_feasible(g, r.best_set, k, m);
  r.elapsed_ms = ms_since(t0);
  return r;
}

}  // namespace domset
