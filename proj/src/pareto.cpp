#include "domset/pareto.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "domset/detail/bitgraph.hpp"
#include "domset/errors.hpp"

namespace domset {

namespace {

using detail::BitGraph;
using Clock = std::chrono::steady_clock;

template <typename T>
bool dominates_impl(const std::vector<T>& p, const std::vector<T>& q) {
  if (p.size() != q.size())
    throw InputError("objective vectors differ in length: " +
                     std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()));
  bool strict = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) return false;
    if (p[i] < q[i]) strict = true;
  }
  return strict;
}

bool mask_k_rule(const Graph& g, const BitGraph& bg, std::uint64_t set, int k) {
  if (k <= 0) return true;
  if (!set) return false;
  if (k == 1) return detail::mask_connected(bg, set);
  if (std::popcount(set) < 2) return false;
  if (!detail::mask_connected(bg, set)) return false;
  for (std::uint64_t rest = set; rest;) {
    int v = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    if (std::popcount(bg.nbr[v] & set) < k) return false;
  }
  return subset_connectivity(g, detail::subset_from_mask(set)) >= k;
}

struct Candidate {
  std::vector<long long> units;
  std::vector<double> vals;
  std::uint64_t mask;
};

}  // namespace

bool dominates(const std::vector<long long>& p, const std::vector<long long>& q) {
  return dominates_impl(p, q);
}

bool dominates(const std::vector<double>& p, const std::vector<double>& q) {
  return dominates_impl(p, q);
}

ParetoFront pareto_front(const Graph& g, const WeightVectorTable& w, int k,
                         int m, bool collect_all_sets) {
  auto t0 = Clock::now();
  if (g.empty()) throw InputError("graph has no vertices");
  if (m < 1) throw InputError("domination multiplicity m must be >= 1");
  if (k < 0) throw InputError("connectivity requirement k must be >= 0");
  int n = g.num_vertices();
  if (n > kParetoVertexCap)
    throw ResourceError("frontier enumeration caps at " +
                        std::to_string(kParetoVertexCap) +
                        " vertices, instance has " + std::to_string(n));
  if (w.size() != n)
    throw InputError("weight table has " + std::to_string(w.size()) +
                     " rows for a graph with " + std::to_string(n) +
                     " vertices");

  BitGraph bg = BitGraph::from(g);
  // Exact tables accumulate scaled integers; inexact ones fall back to
  // doubles for both the objective and the dominance comparisons.
  auto eval = [&](std::uint64_t mask) {
    Candidate c;
    c.mask = mask;
    c.units.assign(w.exact ? w.mu : 0, 0);
    c.vals.assign(w.mu, 0.0);
    for (std::uint64_t rest = mask; rest;) {
      int v = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      for (int j = 0; j < w.mu; ++j) {
        c.vals[j] += w.raw[v - 1][j];
        if (w.exact) c.units[j] += w.units[v - 1][j];
      }
    }
    return c;
  };
  auto cand_dominates = [&](const Candidate& a, const Candidate& b) {
    return w.exact ? dominates_impl(a.units, b.units)
                   : dominates_impl(a.vals, b.vals);
  };
  auto same_vector = [&](const Candidate& a, const Candidate& b) {
    return w.exact ? a.units == b.units : a.vals == b.vals;
  };

  std::vector<Candidate> archive;
  std::vector<std::vector<std::uint64_t>> archive_sets;
  long long nodes = 0;
  std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ++nodes;
    if (!detail::mask_m_dominated(bg, mask, m)) continue;
    if (!mask_k_rule(g, bg, mask, k)) continue;
    Candidate c = eval(mask);
    bool dominated = false;
    for (std::size_t i = 0; i < archive.size() && !dominated; ++i) {
      if (same_vector(archive[i], c)) {
        if (collect_all_sets) archive_sets[i].push_back(mask);
        if (detail::compare_masks_canonical(mask, archive[i].mask) < 0)
          archive[i].mask = mask;
        dominated = true;  // merged, nothing further to do
      } else if (cand_dominates(archive[i], c)) {
        dominated = true;
      }
    }
    if (dominated) continue;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < archive.size(); ++i) {
      if (!cand_dominates(c, archive[i])) {
        if (keep != i) {
          archive[keep] = std::move(archive[i]);
          if (collect_all_sets) archive_sets[keep] = std::move(archive_sets[i]);
        }
        ++keep;
      }
    }
    archive.resize(keep);
    if (collect_all_sets) {
      archive_sets.resize(keep);
      archive_sets.push_back({mask});
    }
    archive.push_back(std::move(c));
  }

  ParetoFront front;
  front.mu = w.mu;
  front.nodes_explored = nodes;
  if (archive.empty()) {
    front.status = SolveStatus::Infeasible;
    front.infeasible_reason =
        "no subset satisfies the (k=" + std::to_string(k) +
        ", m=" + std::to_string(m) + ") requirement";
    if (k >= 1)
      front.graph_connectivity =
          subset_connectivity(g, VertexSubset::full(n));
    front.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return front;
  }

  std::vector<std::size_t> order(archive.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (w.exact && archive[a].units != archive[b].units)
      return archive[a].units < archive[b].units;
    if (!w.exact && archive[a].vals != archive[b].vals)
      return archive[a].vals < archive[b].vals;
    return detail::compare_masks_canonical(archive[a].mask, archive[b].mask) < 0;
  });

  front.status = SolveStatus::Optimal;
  for (std::size_t i : order) {
    ParetoPoint p;
    p.objective = archive[i].vals;
    if (w.exact) {
      p.objective_units = archive[i].units;
      for (int j = 0; j < w.mu; ++j)
        p.objective[j] = static_cast<double>(archive[i].units[j]) /
                         static_cast<double>(w.col_scale[j]);
    }
    p.set = detail::subset_from_mask(archive[i].mask);
    if (collect_all_sets) {
      for (std::uint64_t mask : archive_sets[i])
        p.all_sets.push_back(detail::subset_from_mask(mask));
      std::sort(p.all_sets.begin(), p.all_sets.end());
    }
    front.points.push_back(std::move(p));
  }
  front.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return front;
}

}  // namespace domset
