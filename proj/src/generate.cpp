#include "domset/generate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "domset/errors.hpp"

namespace domset {

int DeterministicRng::uniform_int(int lo, int hi) {
  if (lo > hi) throw InputError("empty integer range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  std::uint64_t mask = std::bit_ceil(span) - 1;
  for (;;) {
    std::uint64_t draw = bits() & mask;
    if (draw < span) return lo + static_cast<int>(draw);
  }
}

namespace {

// Core vertices are 1..c; core vertex i owns leaves c + (i-1)*t + 1 .. c + i*t.
Fixture assemble(const std::string& family, int c, int t,
                 std::vector<std::pair<int, int>> core_edges, int k, int m,
                 int ties_per_leaf) {
  int n = c + c * t;
  std::vector<std::pair<int, int>> edges = std::move(core_edges);
  for (int i = 1; i <= c; ++i)
    for (int j = 0; j < t; ++j) {
      int leaf = c + (i - 1) * t + j + 1;
      for (int off = 0; off < ties_per_leaf; ++off)
        edges.emplace_back((i - 1 + off) % c + 1, leaf);
    }
  std::vector<int> core(c);
  std::iota(core.begin(), core.end(), 1);
  return {family, Graph(n, std::move(edges)), VertexSubset(std::move(core)), k,
          m};
}

void require_params(const std::string& family, int c, int t, int min_core) {
  if (c < min_core)
    throw InputError(family + " needs a core of at least " +
                     std::to_string(min_core) + " vertices");
  if (t < 0) throw InputError("leaf count must be >= 0");
}

std::vector<std::pair<int, int>> clique_edges(int c) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= c; ++u)
    for (int v = u + 1; v <= c; ++v) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> tree_edges(int c) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= c; ++v) edges.emplace_back(v / 2, v);
  return edges;
}

std::vector<std::pair<int, int>> ring_edges(int c) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < c; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, c);
  return edges;
}

}  // namespace

std::vector<std::string> fixture_families() {
  return {"clique-backbone", "tree-backbone", "ring-backbone", "ring-3dom"};
}

Fixture make_fixture(const std::string& family, int core_size, int leaves) {
  if (family == "clique-backbone") {
    require_params(family, core_size, leaves, 4);
    return assemble(family, core_size, leaves, clique_edges(core_size), 3, 1,
                    1);
  }
  if (family == "tree-backbone") {
    require_params(family, core_size, leaves, 1);
    return assemble(family, core_size, leaves, tree_edges(core_size), 1, 1, 1);
  }
  if (family == "ring-backbone") {
    require_params(family, core_size, leaves, 3);
    return assemble(family, core_size, leaves, ring_edges(core_size), 2, 1, 1);
  }
  if (family == "ring-3dom") {
    require_params(family, core_size, leaves, 3);
    return assemble(family, core_size, leaves, ring_edges(core_size), 2, 3, 3);
  }
  std::string known;
  for (const auto& f : fixture_families())
    known += (known.empty() ? "" : ", ") + f;
  throw InputError("unknown family '" + family + "' (known: " + known + ")");
}

Graph gen_gnp(int n, double p, DeterministicRng& rng) {
  if (n < 1) throw InputError("vertex count must be >= 1");
  if (p < 0.0 || p > 1.0) throw InputError("edge probability outside [0, 1]");
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gen_gnp_connected(int n, double p, DeterministicRng& rng,
                        int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = gen_gnp(n, p, rng);
    if (g.is_connected()) return g;
  }
  throw ResourceError("no connected sample within " +
                      std::to_string(max_tries) + " tries (n=" +
                      std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

Graph gen_unit_disk(int n, double radius, DeterministicRng& rng) {
  if (n < 1) throw InputError("vertex count must be >= 1");
  if (radius <= 0.0) throw InputError("radius must be positive");
  std::vector<std::pair<double, double>> pts(n);
  for (auto& [x, y] : pts) {
    x = rng.uniform01();
    y = rng.uniform01();
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double dx = pts[u].first - pts[v].first;
      double dy = pts[u].second - pts[v].second;
      if (std::sqrt(dx * dx + dy * dy) <= radius)
        edges.emplace_back(u + 1, v + 1);
    }
  return Graph(n, std::move(edges));
}

std::vector<std::vector<std::string>> random_integer_weights(
    int n, int mu, int lo, int hi, DeterministicRng& rng) {
  if (n < 1 || mu < 1)
    throw InputError("weight table dimensions must be >= 1");
  if (lo < 1 || lo > hi)
    throw InputError("weight range must satisfy 1 <= lo <= hi");
  std::vector<std::vector<std::string>> rows(n);
  for (auto& row : rows)
    for (int j = 0; j < mu; ++j)
      row.push_back(std::to_string(rng.uniform_int(lo, hi)));
  return rows;
}

EstimateTable random_estimates(int n, int l, int eta, DeterministicRng& rng) {
  if (n < 1) throw InputError("estimate table needs at least one row");
  auto pool = enumerate_interval_estimates(l, eta);
  EstimateTable table;
  table.l = l;
  table.eta = eta;
  for (int i = 0; i < n; ++i)
    table.rows.push_back(
        pool[rng.uniform_int(0, static_cast<int>(pool.size()) - 1)]);
  return table;
}

}  // namespace domset
