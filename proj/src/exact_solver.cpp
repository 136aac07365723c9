#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>

#include "domset/detail/bitgraph.hpp"
#include "domset/errors.hpp"
#include "domset/solve.hpp"

namespace domset {

namespace {

using detail::BitGraph;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool mask_k_rule(const Graph& g, const BitGraph& bg, std::uint64_t set, int k) {
  if (k <= 0) return true;
  if (!set) return false;
  if (k == 1) return detail::mask_connected(bg, set);
  if (std::popcount(set) < 2) return false;
  if (!detail::mask_connected(bg, set)) return false;
  // Connectivity never exceeds the minimum induced degree.
  for (std::uint64_t rest = set; rest;) {
    int v = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    if (std::popcount(bg.nbr[v] & set) < k) return false;
  }
  return subset_connectivity(g, detail::subset_from_mask(set)) >= k;
}

struct UnitWeights {
  std::vector<long long> units;  // index 0 unused
  long long scale = 1;
  bool exact = true;
  std::vector<double> raw;
};

UnitWeights resolve_weights(const Graph& g, const ProblemSpec& spec) {
  UnitWeights w;
  int n = g.num_vertices();
  if (!spec.weights) {
    w.units.assign(n + 1, 1);
    w.raw.assign(n + 1, 1.0);
    return w;
  }
  const WeightTable& t = *spec.weights;
  if (t.size() != n)
    throw InputError("weight table has " + std::to_string(t.size()) +
                     " rows for a graph with " + std::to_string(n) +
                     " vertices");
  w.exact = t.exact;
  w.scale = t.exact ? t.scale : 1;
  w.units.assign(n + 1, 0);
  w.raw.assign(n + 1, 0.0);
  for (int v = 1; v <= n; ++v) {
    w.raw[v] = t.raw[v - 1];
    if (t.exact) w.units[v] = t.units[v - 1];
  }
  return w;
}

// Exact tables sum in integer units; the double path is only used for
// weights finer than the exact parser accepts.
struct RunningObjective {
  long long units = 0;
  double approx = 0.0;
};

WeightValue objective_value(const UnitWeights& w, const RunningObjective& o) {
  if (w.exact) return {o.units, w.scale, true, 0.0};
  return {0, 1, false, o.approx};
}

int normalized_k(const ProblemSpec& spec) {
  return spec.variant == Variant::DS ? 0 : spec.k;
}

SolveResult infeasible_result(const Graph& g, const ProblemSpec& spec,
                              std::string reason) {
  SolveResult r;
  r.status = SolveStatus::Infeasible;
  r.method = spec.method;
  r.infeasible_reason = std::move(reason);
  if (spec.variant == Variant::CDS)
    r.graph_connectivity =
        g.num_vertices() > 0
            ? subset_connectivity(g, VertexSubset::full(g.num_vertices()))
            : 0;
  return r;
}

SolveResult disconnected_cds_result(const Graph& g, const ProblemSpec& spec) {
  auto comps = g.components();
  return infeasible_result(
      g, spec,
      "graph is disconnected (components containing vertex " +
          std::to_string(comps[0].front()) + " and vertex " +
          std::to_string(comps[1].front()) +
          " cannot share a connected dominating set)");
}

SolveResult finish_feasible(const Graph& g, const ProblemSpec& spec,
                            SolveStatus status, std::uint64_t mask,
                            const UnitWeights& w, long long nodes) {
  SolveResult r;
  r.status = status;
  r.method = spec.method;
  r.nodes_explored = nodes;
  r.best_set = detail::subset_from_mask(mask);
  RunningObjective obj;
  for (int v : r.best_set.members()) {
    obj.units += w.units[v];
    obj.approx += w.raw[v];
  }
  r.objective = objective_value(w, obj);
  r.certificate = check_feasible(g, r.best_set, normalized_k(spec), spec.m);
  return r;
}

SolveResult exact_enum(const Graph& g, const ProblemSpec& spec) {
  auto t0 = Clock::now();
  int n = g.num_vertices();
  if (n > kExactEnumVertexCap)
    throw ResourceError("exhaustive enumeration caps at " +
                        std::to_string(kExactEnumVertexCap) +
                        " vertices, instance has " + std::to_string(n));
  int k = normalized_k(spec);
  if (k >= 1 && !g.is_connected()) {
    auto r = disconnected_cds_result(g, spec);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  BitGraph bg = BitGraph::from(g);
  long long nodes = 0;

  if (!spec.weights) {
    // Cardinality objective: combinations by increasing size in canonical
    // order, so the first feasible hit is the canonical optimum.
    UnitWeights w = resolve_weights(g, spec);
    for (int s = 1; s <= n; ++s) {
      std::vector<int> idx(s);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t(1) << i;
        ++nodes;
        if (detail::mask_m_dominated(bg, mask, spec.m) &&
            mask_k_rule(g, bg, mask, k)) {
          auto r = finish_feasible(g, spec, SolveStatus::Optimal, mask, w, nodes);
          r.elapsed_ms = ms_since(t0);
          return r;
        }
        int i = s - 1;
        while (i >= 0 && idx[i] == n - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  } else {
    UnitWeights w = resolve_weights(g, spec);
    bool found = false;
    std::uint64_t best_mask = 0;
    RunningObjective best;
    std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      ++nodes;
      if (!detail::mask_m_dominated(bg, mask, spec.m)) continue;
      if (!mask_k_rule(g, bg, mask, k)) continue;
      RunningObjective obj;
      for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        obj.units += w.units[v];
        obj.approx += w.raw[v];
      }
      int cmp = found ? compare_weights(objective_value(w, obj),
                                        objective_value(w, best))
                      : -1;
      if (cmp < 0 || (cmp == 0 && detail::compare_masks_canonical(
                                      mask, best_mask) < 0)) {
        found = true;
        best = obj;
        best_mask = mask;
      }
    }
    if (found) {
      auto r = finish_feasible(g, spec, SolveStatus::Optimal, best_mask, w, nodes);
      r.elapsed_ms = ms_since(t0);
      return r;
    }
  }

  auto r = infeasible_result(
      g, spec,
      "no subset satisfies the (k=" + std::to_string(k) +
          ", m=" + std::to_string(spec.m) + ") requirement");
  r.nodes_explored = nodes;
  r.elapsed_ms = ms_since(t0);
  return r;
}

struct BbSearch {
  const Graph& g;
  const BitGraph& bg;
  const ProblemSpec& spec;
  UnitWeights w;
  int k = 0;
  long long budget = 0;
  long long nodes = 0;

  std::vector<int> need = {};       // remaining dominator deficit per vertex
  long long total_deficit = 0;
  std::uint64_t chosen = 0, excluded = 0;
  RunningObjective current = {};

  bool found = false;
  std::uint64_t best_mask = 0;
  RunningObjective best = {};
  int max_cover = 1;

  bool better_than_best(const RunningObjective& obj, std::uint64_t mask) const {
    if (!found) return true;
    int cmp = compare_weights(objective_value(w, obj), objective_value(w, best));
    if (cmp != 0) return cmp < 0;
    return detail::compare_masks_canonical(mask, best_mask) < 0;
  }

  // Cheapest still-available vertex, used by the admissible lower bound.
  bool min_allowed_weight(RunningObjective& out) const {
    std::uint64_t allowed = bg.all & ~chosen & ~excluded;
    if (!allowed) return false;
    bool any = false;
    for (std::uint64_t rest = allowed; rest;) {
      int v = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      if (!any) {
        out = {w.units[v], w.raw[v]};
        any = true;
      } else {
        out.units = std::min(out.units, w.units[v]);
        out.approx = std::min(out.approx, w.raw[v]);
      }
    }
    return true;
  }

  bool bound_allows(long long extra_vertices) {
    if (!found) return true;
    RunningObjective minw;
    if (extra_vertices > 0 && !min_allowed_weight(minw)) return false;
    RunningObjective lb = current;
    lb.units += extra_vertices * minw.units;
    lb.approx += static_cast<double>(extra_vertices) * minw.approx;
    return compare_weights(objective_value(w, lb), objective_value(w, best)) <= 0;
  }

  bool connectivity_extendable() const {
    if (k <= 0 || !chosen) return true;
    std::uint64_t region = bg.all & ~excluded;
    std::uint64_t seen = chosen & (~chosen + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest;) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        next |= bg.nbr[v];
      }
      next &= region & ~seen;
      seen |= next;
      frontier = next;
    }
    return (chosen & ~seen) == 0;
  }

  struct Undo {
    std::vector<std::pair<int, int>> old_needs;
    long long old_deficit = 0;
  };

  Undo add_vertex(int v) {
    Undo u;
    u.old_deficit = total_deficit;
    std::uint64_t bit = std::uint64_t(1) << (v - 1);
    chosen |= bit;
    current.units += w.units[v];
    current.approx += w.raw[v];
    if (need[v] > 0) {
      u.old_needs.emplace_back(v, need[v]);
      total_deficit -= need[v];
      need[v] = 0;
    }
    for (std::uint64_t rest = bg.nbr[v] & ~chosen; rest;) {
      int x = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      if (need[x] > 0) {
        u.old_needs.emplace_back(x, need[x]);
        --need[x];
        --total_deficit;
      }
    }
    return u;
  }

  void remove_vertex(int v, const Undo& u) {
    std::uint64_t bit = std::uint64_t(1) << (v - 1);
    chosen &= ~bit;
    current.units -= w.units[v];
    current.approx -= w.raw[v];
    for (auto [x, old] : u.old_needs) need[x] = old;
    total_deficit = u.old_deficit;
  }

  void branch_over(std::uint64_t candidates) {
    std::uint64_t locally_excluded = 0;
    for (std::uint64_t rest = candidates; rest;) {
      int u = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      Undo undo = add_vertex(u);
      dfs();
      remove_vertex(u, undo);
      std::uint64_t bit = std::uint64_t(1) << (u - 1);
      excluded |= bit;
      locally_excluded |= bit;
    }
    excluded &= ~locally_excluded;
  }

  void dfs() {
    ++nodes;
    if (nodes > budget)
      throw ResourceError("branch-and-bound node budget of " +
                          std::to_string(budget) + " exhausted (set " +
                          std::string(kNodeBudgetEnvVar) + " to raise it)");
    if (total_deficit == 0) {
      if (mask_k_rule(g, bg, chosen, k)) {
        if (better_than_best(current, chosen)) {
          found = true;
          best = current;
          best_mask = chosen;
        }
        return;  // supersets only cost more
      }
      if (!bound_allows(1)) return;
      if (!connectivity_extendable()) return;
      std::uint64_t reach = 0;
      for (std::uint64_t rest = chosen; rest;) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        reach |= bg.nbr[v];
      }
      branch_over(reach & ~chosen & ~excluded);
      return;
    }
    long long extra = (total_deficit + max_cover - 1) / max_cover;
    if (!bound_allows(extra)) return;
    if (!connectivity_extendable()) return;
    int v = 0;
    for (int x = 1; x <= bg.n; ++x) {
      if (need[x] > 0) {
        v = x;
        break;
      }
    }
    std::uint64_t closed = bg.nbr[v] | (std::uint64_t(1) << (v - 1));
    branch_over(closed & ~chosen & ~excluded);
  }
};

SolveResult branch_bound(const Graph& g, const ProblemSpec& spec) {
  auto t0 = Clock::now();
  int n = g.num_vertices();
  if (n > 64)
    throw ResourceError("branch-and-bound caps at 64 vertices, instance has " +
                        std::to_string(n));
  int k = normalized_k(spec);
  if (k >= 1 && !g.is_connected()) {
    auto r = disconnected_cds_result(g, spec);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  BitGraph bg = BitGraph::from(g);
  BbSearch search{.g = g,
                  .bg = bg,
                  .spec = spec,
                  .w = resolve_weights(g, spec),
                  .k = k,
                  .budget = node_budget_from_env()};
  search.need.assign(n + 1, spec.m);
  search.total_deficit = static_cast<long long>(n) * spec.m;
  int max_deg = 0;
  for (int v = 1; v <= n; ++v) max_deg = std::max(max_deg, g.degree(v));
  search.max_cover = max_deg + spec.m;
  search.dfs();

  if (!search.found) {
    auto r = infeasible_result(
        g, spec,
        "no subset satisfies the (k=" + std::to_string(k) +
            ", m=" + std::to_string(spec.m) + ") requirement");
    r.nodes_explored = search.nodes;
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  auto r = finish_feasible(g, spec, SolveStatus::Optimal, search.best_mask,
                           search.w, search.nodes);
  r.elapsed_ms = ms_since(t0);
  return r;
}

void validate_spec(const Graph& g, const ProblemSpec& spec) {
  if (g.empty()) throw InputError("graph has no vertices");
  if (spec.m < 1) throw InputError("domination multiplicity m must be >= 1");
  if (spec.variant == Variant::DS && spec.k >= 2)
    throw InputError("k >= 2 requires the connected variant");
  if (spec.variant == Variant::CDS && spec.k < 1)
    throw InputError("connected variant requires k >= 1");
  if (spec.weights && spec.weights->size() != g.num_vertices())
    throw InputError("weight table has " + std::to_string(spec.weights->size()) +
                     " rows for a graph with " +
                     std::to_string(g.num_vertices()) + " vertices");
  if (spec.method == Method::Greedy) {
    if (spec.variant != Variant::DS)
      throw InputError("greedy method solves the plain domination variant only");
    if (spec.weights)
      throw InputError("greedy method does not take weights");
  }
  if (spec.method == Method::TwoPhase) {
    if (spec.variant != Variant::CDS || spec.k != 1 || spec.m != 1)
      throw InputError(
          "two-phase method solves the plain connected variant (k=1, m=1) only");
    if (spec.weights)
      throw InputError("two-phase method does not take weights");
  }
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::DS ? "ds" : "cds"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::ExactEnum: return "exact";
    case Method::BranchBound: return "bb";
    case Method::Greedy: return "greedy";
    case Method::TwoPhase: return "two-phase";
  }
  return "?";
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

long long node_budget_from_env() {
  const char* text = std::getenv(kNodeBudgetEnvVar);
  if (!text || !*text) return kDefaultNodeBudget;
  char* end = nullptr;
  long long v = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0' || v <= 0)
    throw InputError(std::string(kNodeBudgetEnvVar) +
                     " must be a positive integer, got '" + text + "'");
  return v;
}

SolveResult solve(const Graph& g, const ProblemSpec& spec) {
  validate_spec(g, spec);
  switch (spec.method) {
    case Method::ExactEnum: return exact_enum(g, spec);
    case Method::BranchBound: return branch_bound(g, spec);
    case Method::Greedy: return greedy_ds(g, spec.m);
    case Method::TwoPhase: return two_phase_cds(g);
  }
  throw InputError("unknown method");
}

SolveResult solve_min_ds(const Graph& g) {
  return solve(g, {Variant::DS, 0, 1, {}, Method::ExactEnum});
}

SolveResult solve_min_cds(const Graph& g) {
  return solve(g, {Variant::CDS, 1, 1, {}, Method::ExactEnum});
}

SolveResult solve_min_weighted(const Graph& g, Variant variant,
                               const WeightTable& w) {
  return solve(g, {variant, variant == Variant::CDS ? 1 : 0, 1, w,
                   Method::ExactEnum});
}

SolveResult solve_min_kmcds(const Graph& g, int k, int m,
                            const std::optional<WeightTable>& w) {
  if (k < 1) throw InputError("connected variant requires k >= 1");
  return solve(g, {Variant::CDS, k, m, w, Method::ExactEnum});
}

}  // namespace domset
