#include <algorithm>
#include <bit>
#include <chrono>
#include <queue>

#include "domset/detail/bitgraph.hpp"
#include "domset/errors.hpp"
#include "domset/solve.hpp"

namespace domset {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

SolveResult disconnected_result(const Graph& g, Method method) {
  auto comps = g.components();
  SolveResult r;
  r.status = SolveStatus::Infeasible;
  r.method = method;
  r.graph_connectivity = 0;
  r.infeasible_reason =
      "graph is disconnected (components containing vertex " +
      std::to_string(comps[0].front()) + " and vertex " +
      std::to_string(comps[1].front()) +
      " cannot share a connected dominating set)";
  return r;
}

}  // namespace

SolveResult greedy_ds(const Graph& g, int m) {
  auto t0 = Clock::now();
  if (g.empty()) throw InputError("graph has no vertices");
  if (m < 1) throw InputError("domination multiplicity m must be >= 1");
  int n = g.num_vertices();
  std::vector<char> in_set(n + 1, 0);
  std::vector<int> cover_count(n + 1, 0);  // dominators already adjacent
  auto unmet = [&](int v) { return !in_set[v] && cover_count[v] < m; };

  long long rounds = 0;
  std::vector<int> picked;
  while (true) {
    bool pending = false;
    for (int v = 1; v <= n && !pending; ++v) pending = unmet(v);
    if (!pending) break;
    int best_u = 0, best_cov = 0;
    for (int u = 1; u <= n; ++u) {
      if (in_set[u]) continue;
      int cov = unmet(u) ? 1 : 0;
      for (int x : g.neighbors(u))
        if (unmet(x)) ++cov;
      if (cov > best_cov) {
        best_cov = cov;
        best_u = u;
      }
    }
    in_set[best_u] = 1;
    picked.push_back(best_u);
    for (int x : g.neighbors(best_u)) ++cover_count[x];
    ++rounds;
  }

  SolveResult r;
  r.status = SolveStatus::Feasible;
  r.method = Method::Greedy;
  r.best_set = VertexSubset(std::move(picked));
  r.objective = WeightValue::integer(r.best_set.size());
  r.certificate = check_feasible(g, r.best_set, 0, m);
  r.nodes_explored = rounds;
  r.elapsed_ms = ms_since(t0);
  return r;
}

VertexSubset max_independent_set(const Graph& g, MisMode mode) {
  if (g.empty()) throw InputError("graph has no vertices");
  int n = g.num_vertices();
  VertexSubset result;

  if (mode == MisMode::MaximalGreedy) {
    std::vector<char> blocked(n + 1, 0);
    std::vector<int> chosen;
    for (int v = 1; v <= n; ++v) {
      if (blocked[v]) continue;
      chosen.push_back(v);
      for (int u : g.neighbors(v)) blocked[u] = 1;
    }
    result = VertexSubset(std::move(chosen));
  } else {
    if (n > kExactEnumVertexCap)
      throw ResourceError("exact independent set search caps at " +
                          std::to_string(kExactEnumVertexCap) +
                          " vertices, instance has " + std::to_string(n));
    auto bg = detail::BitGraph::from(g);
    std::uint64_t best_mask = 0;
    int best_count = 0;
    // Take-first depth-first search visits sets in canonical order, so the
    // first set found at the winning size is the canonical optimum.
    auto dfs = [&](auto&& self, int v, std::uint64_t mask, int count) -> void {
      if (count + (n - v + 1) <= best_count) return;
      if (v > n) {
        if (count > best_count) {
          best_count = count;
          best_mask = mask;
        }
        return;
      }
      std::uint64_t bit = std::uint64_t(1) << (v - 1);
      if ((bg.nbr[v] & mask) == 0) self(self, v + 1, mask | bit, count + 1);
      self(self, v + 1, mask, count);
    };
    dfs(dfs, 1, 0, 0);
    result = detail::subset_from_mask(best_mask);
  }

  // A maximal independent set dominates: any undominated vertex could still
  // be added independently.
  if (!is_dominating(g, result))
    throw std::logic_error("independent set construction is not maximal");
  return result;
}

SolveResult two_phase_cds(const Graph& g) {
  auto t0 = Clock::now();
  if (g.empty()) throw InputError("graph has no vertices");
  if (!g.is_connected()) {
    auto r = disconnected_result(g, Method::TwoPhase);
    r.elapsed_ms = ms_since(t0);
    return r;
  }
  int n = g.num_vertices();
  std::vector<char> in_set(n + 1, 0);
  VertexSubset seed = max_independent_set(g, MisMode::MaximalGreedy);
  for (int v : seed.members()) in_set[v] = 1;

  long long merges = 0;
  while (true) {
    // Label the components the current set induces.
    std::vector<int> comp(n + 1, -1);
    int comp_count = 0;
    for (int s = 1; s <= n; ++s) {
      if (!in_set[s] || comp[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      comp[s] = comp_count;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
          if (in_set[u] && comp[u] < 0) {
            comp[u] = comp_count;
            q.push(u);
          }
        }
      }
      ++comp_count;
    }
    if (comp_count <= 1) break;

    // For each component, the nearest foreign component through vertices
    // outside the set; keep the globally shortest connector (ties: canonical
    // order on the added vertices).
    bool have_best = false;
    int best_dist = 0;
    std::vector<int> best_added;
    for (int c = 0; c < comp_count; ++c) {
      std::vector<int> dist(n + 1, -1), parent(n + 1, 0);
      std::queue<int> q;
      for (int v = 1; v <= n; ++v) {
        if (in_set[v] && comp[v] == c) {
          dist[v] = 0;
          q.push(v);
        }
      }
      int found_dist = -1;
      std::vector<int> targets;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (found_dist >= 0 && dist[v] >= found_dist) break;
        for (int u : g.neighbors(v)) {
          if (dist[u] >= 0) continue;
          if (in_set[u]) {
            if (comp[u] != c) {
              dist[u] = dist[v] + 1;
              parent[u] = v;
              if (found_dist < 0) found_dist = dist[u];
              if (dist[u] == found_dist) targets.push_back(u);
            }
            continue;  // same-component members are sources already
          }
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        }
      }
      for (int t : targets) {
        std::vector<int> added;
        for (int v = parent[t]; dist[v] > 0; v = parent[v]) added.push_back(v);
        std::sort(added.begin(), added.end());
        if (!have_best || found_dist < best_dist ||
            (found_dist == best_dist && added < best_added)) {
          have_best = true;
          best_dist = found_dist;
          best_added = added;
        }
      }
    }
    for (int v : best_added) in_set[v] = 1;
    ++merges;
  }

  std::vector<int> members;
  for (int v = 1; v <= n; ++v)
    if (in_set[v]) members.push_back(v);

  SolveResult r;
  r.status = SolveStatus::Feasible;
  r.method = Method::TwoPhase;
  r.best_set = VertexSubset(std::move(members));
  r.objective = WeightValue::integer(r.best_set.size());
  r.certificate = check_feasible(g, r.best_set, 1, 1);
  r.nodes_explored = merges;
  r.elapsed_ms = ms_since(t0);
  return r;
}

MaxLeafResult max_leaf_spanning_tree(const Graph& g) {
  int n = g.num_vertices();
  if (n < 3)
    throw InputError("leaf maximization needs at least 3 vertices");
  if (n > kMaxLeafVertexCap)
    throw ResourceError("exact leaf maximization caps at " +
                        std::to_string(kMaxLeafVertexCap) +
                        " vertices, instance has " + std::to_string(n));
  MaxLeafResult out;
  if (!g.is_connected()) {
    out.status = SolveStatus::Infeasible;
    out.infeasible_reason = "graph is disconnected, no spanning tree exists";
    return out;
  }

  auto bg = detail::BitGraph::from(g);
  int best_count = -1;
  std::vector<std::pair<int, int>> best_edges;
  std::uint64_t limit = std::uint64_t(1) << n;
  // Candidate interior sets: for each one, build a real spanning tree (tree
  // of the interior plus every remaining vertex hung off it) and count the
  // leaves of that tree.
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (!detail::mask_connected(bg, mask)) continue;
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      if (mask & (std::uint64_t(1) << (v - 1))) continue;
      std::uint64_t anchors = bg.nbr[v] & mask;
      if (!anchors) {
        ok = false;
        break;
      }
      edges.emplace_back(std::min(v, std::countr_zero(anchors) + 1),
                         std::max(v, std::countr_zero(anchors) + 1));
    }
    if (!ok) continue;

    // Breadth-first tree over the interior.
    std::uint64_t seen = mask & (~mask + 1);
    std::vector<int> queue_vs{std::countr_zero(mask) + 1};
    for (std::size_t qi = 0; qi < queue_vs.size(); ++qi) {
      int v = queue_vs[qi];
      std::uint64_t fresh = bg.nbr[v] & mask & ~seen;
      while (fresh) {
        int u = std::countr_zero(fresh) + 1;
        fresh &= fresh - 1;
        seen |= std::uint64_t(1) << (u - 1);
        edges.emplace_back(std::min(v, u), std::max(v, u));
        queue_vs.push_back(u);
      }
    }

    std::vector<int> deg(n + 1, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    int leaves = 0;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) ++leaves;
    if (leaves > best_count) {
      std::sort(edges.begin(), edges.end());
      best_count = leaves;
      best_edges = std::move(edges);
    }
  }

  out.status = SolveStatus::Optimal;
  out.leaf_count = best_count;
  out.tree_edges = std::move(best_edges);
  return out;
}

}  // namespace domset
