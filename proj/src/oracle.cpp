#include "domset/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "domset/errors.hpp"

namespace domset {

namespace {

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

bool plain_m_dominated(const Graph& g, const std::vector<char>& in_set,
                       int m) {
  for (int v = 1; v <= g.num_vertices(); ++v) {
    if (in_set[v]) continue;
    int inside = 0;
    for (int u : g.neighbors(v))
      if (in_set[u]) ++inside;
    if (inside < m) return false;
  }
  return true;
}

bool plain_connected(const Graph& g, const std::vector<char>& in_set,
                     const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<char> seen(g.num_vertices() + 1, 0);
  std::vector<int> stack{members.front()};
  seen[members.front()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!in_set[u] || seen[u]) continue;
      seen[u] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == static_cast<int>(members.size());
}

// Does removing some <= limit members disconnect the set? Checked by trying
// every removal, Whitney style.
bool separator_up_to(const Graph& g, std::vector<char>& in_set,
                     const std::vector<int>& members, int limit, int start) {
  std::vector<int> remaining;
  for (int v : members)
    if (in_set[v]) remaining.push_back(v);
  if (remaining.size() >= 2 && !plain_connected(g, in_set, remaining))
    return true;
  if (limit == 0) return false;
  for (std::size_t i = start; i < members.size(); ++i) {
    if (!in_set[members[i]]) continue;
    in_set[members[i]] = 0;
    bool found = separator_up_to(g, in_set, members, limit - 1,
                                 static_cast<int>(i) + 1);
    in_set[members[i]] = 1;
    if (found) return true;
  }
  return false;
}

bool plain_k_rule(const Graph& g, std::vector<char>& in_set,
                  const std::vector<int>& members, int k) {
  if (k <= 0) return true;
  if (k == 1) return plain_connected(g, in_set, members);
  if (members.size() < 2) return false;
  bool complete = true;
  for (std::size_t i = 0; i < members.size() && complete; ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.has_edge(members[i], members[j])) {
        complete = false;
        break;
      }
  if (complete) return static_cast<int>(members.size()) >= k + 1;
  return !separator_up_to(g, in_set, members, k - 1, 0);
}

bool plain_feasible(const Graph& g, std::vector<char>& in_set,
                    const std::vector<int>& members, int k, int m) {
  return plain_m_dominated(g, in_set, m) && plain_k_rule(g, in_set, members, k);
}

void require_oracle_size(const Graph& g) {
  if (g.empty()) throw InputError("graph has no vertices");
  if (g.num_vertices() > kOracleVertexCap)
    throw ResourceError("reference scan caps at " +
                        std::to_string(kOracleVertexCap) +
                        " vertices, instance has " +
                        std::to_string(g.num_vertices()));
}

template <typename Visit>
void scan_feasible(const Graph& g, int k, int m, Visit&& visit) {
  int n = g.num_vertices();
  std::vector<char> in_set(n + 1, 0);
  std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    auto members = mask_members(mask);
    std::fill(in_set.begin(), in_set.end(), 0);
    for (int v : members) in_set[v] = 1;
    if (plain_feasible(g, in_set, members, k, m)) visit(members);
  }
}

// --- estimate side, recomputed from scratch ---

// All valid estimates for (l, eta) by recursive level fill, then the
// contiguity filter. Order is not canonical; callers compare explicitly.
void fill_counts(int level, int l, int remaining, std::vector<int>& counts,
                 std::vector<std::vector<int>>& out) {
  if (level == l) {
    if (remaining == 0) out.push_back(counts);
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    counts[level] = c;
    fill_counts(level + 1, l, remaining - c, counts, out);
  }
  counts[level] = 0;
}

bool counts_contiguous(const std::vector<int>& counts) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i)
    if (counts[i] > 0) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) return false;
  for (int i = first; i <= last; ++i)
    if (counts[i] == 0) return false;
  return true;
}

std::vector<std::vector<int>> all_valid_counts(int l, int eta) {
  std::vector<std::vector<int>> raw;
  std::vector<int> counts(l, 0);
  fill_counts(0, l, eta, counts, raw);
  std::vector<std::vector<int>> out;
  for (auto& c : raw)
    if (counts_contiguous(c)) out.push_back(std::move(c));
  return out;
}

// Proximity magnitude via cumulative counts: sum over levels of the absolute
// difference between the two running totals.
long long prefix_magnitude(const std::vector<int>& a,
                           const std::vector<int>& b) {
  long long pa = 0, pb = 0, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    total += pa > pb ? pa - pb : pb - pa;
  }
  return total;
}

// Mass moved toward better levels going from `a` to `b`.
long long prefix_improvement(const std::vector<int>& a,
                             const std::vector<int>& b) {
  long long pa = 0, pb = 0, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pb > pa) total += pb - pa;
  }
  return total;
}

// counts lex-descending = canonical estimate order
bool counts_canonical_less(const std::vector<int>& a,
                           const std::vector<int>& b) {
  return a > b;
}

long long median_cost(const std::vector<std::vector<int>>& pool,
                      const std::vector<const std::vector<int>*>& rows) {
  long long best = -1;
  for (const auto& cand : pool) {
    long long cost = 0;
    for (const auto* row : rows) cost += prefix_magnitude(cand, *row);
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

std::vector<int> normalize_sum(const std::vector<long long>& sum, int size,
                               int eta) {
  int l = static_cast<int>(sum.size());
  std::vector<int> scaled(l, 0);
  std::vector<std::pair<long long, int>> rem;
  int assigned = 0;
  for (int i = 0; i < l; ++i) {
    scaled[i] = static_cast<int>(sum[i] / size);
    assigned += scaled[i];
    rem.emplace_back(-(sum[i] % size), i);
  }
  std::sort(rem.begin(), rem.end());
  for (int i = 0; assigned < eta; ++i, ++assigned) ++scaled[rem[i].second];
  return scaled;
}

const std::vector<int>& nearest_valid(const std::vector<std::vector<int>>& pool,
                                      const std::vector<int>& counts) {
  const std::vector<int>* best = nullptr;
  long long best_mag = 0, best_imp = 0;
  for (const auto& cand : pool) {
    long long mag = prefix_magnitude(counts, cand);
    long long imp = prefix_improvement(counts, cand);
    if (!best || mag < best_mag ||
        (mag == best_mag && imp > best_imp) ||
        (mag == best_mag && imp == best_imp &&
         counts_canonical_less(cand, *best))) {
      best = &cand;
      best_mag = mag;
      best_imp = imp;
    }
  }
  return *best;
}

}  // namespace

OracleBest oracle_min_set(const Graph& g, int k, int m, const WeightTable* w) {
  require_oracle_size(g);
  if (m < 1) throw InputError("domination multiplicity m must be >= 1");
  if (w && w->size() != g.num_vertices())
    throw InputError("weight table size does not match the graph");
  OracleBest best;
  scan_feasible(g, k, m, [&](const std::vector<int>& members) {
    VertexSubset b{members};
    WeightValue total = w ? w->total(b)
                          : WeightValue::integer(static_cast<long long>(
                                members.size()));
    if (!best.feasible || compare_weights(total, best.objective) < 0 ||
        (compare_weights(total, best.objective) == 0 && b < best.set)) {
      best.feasible = true;
      best.set = std::move(b);
      best.objective = total;
    }
  });
  return best;
}

std::vector<ParetoPoint> oracle_pareto(const Graph& g,
                                       const WeightVectorTable& w, int k,
                                       int m) {
  require_oracle_size(g);
  if (!w.exact)
    throw InputError("reference frontier needs exactly representable weights");
  if (w.size() != g.num_vertices())
    throw InputError("weight table size does not match the graph");

  std::map<std::vector<long long>, VertexSubset> by_vector;
  scan_feasible(g, k, m, [&](const std::vector<int>& members) {
    std::vector<long long> units(w.mu, 0);
    for (int v : members)
      for (int j = 0; j < w.mu; ++j) units[j] += w.units[v - 1][j];
    VertexSubset b{members};
    auto [it, fresh] = by_vector.emplace(std::move(units), b);
    if (!fresh && b < it->second) it->second = std::move(b);
  });

  std::vector<ParetoPoint> points;
  for (const auto& [units, set] : by_vector) {
    bool dominated = false;
    for (const auto& [other, ignored] : by_vector)
      if (dominates(other, units)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    ParetoPoint p;
    p.objective_units = units;
    for (int j = 0; j < w.mu; ++j)
      p.objective.push_back(static_cast<double>(units[j]) /
                            static_cast<double>(w.col_scale[j]));
    p.set = set;
    points.push_back(std::move(p));
  }
  return points;  // map order is already ascending by vector
}

OracleMsest oracle_msest(const Graph& g, const EstimateTable& est, int k,
                         int m, MsestObjective objective) {
  require_oracle_size(g);
  if (est.size() != g.num_vertices())
    throw InputError("estimate table size does not match the graph");
  auto pool = all_valid_counts(est.l, est.eta);

  std::vector<int> ideal(est.l, 0);
  ideal[0] = est.eta;

  OracleMsest best;
  long long best_size = 0;
  scan_feasible(g, k, m, [&](const std::vector<int>& members) {
    long long obj = 0;
    if (objective == MsestObjective::MedianCohesion) {
      std::vector<const std::vector<int>*> rows;
      for (int v : members) rows.push_back(&est.rows[v - 1].counts);
      obj = median_cost(pool, rows);
    } else {
      std::vector<long long> sum(est.l, 0);
      for (int v : members)
        for (int i = 0; i < est.l; ++i) sum[i] += est.rows[v - 1].counts[i];
      auto scaled =
          normalize_sum(sum, static_cast<int>(members.size()), est.eta);
      const auto& agg =
          counts_contiguous(scaled) ? scaled : nearest_valid(pool, scaled);
      obj = prefix_magnitude(agg, ideal);
    }
    VertexSubset b{members};
    long long size = static_cast<long long>(members.size());
    if (!best.feasible || obj < best.objective ||
        (obj == best.objective &&
         (size < best_size || (size == best_size && b < best.set)))) {
      best.feasible = true;
      best.set = std::move(b);
      best.objective = obj;
      best_size = size;
    }
  });
  return best;
}

}  // namespace domset
