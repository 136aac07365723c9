#include "domset/feasibility.hpp"

#include <algorithm>
#include <queue>

#include "domset/errors.hpp"

namespace domset {

namespace {

std::vector<char> membership(const Graph& g, const VertexSubset& b) {
  std::vector<char> in(g.num_vertices() + 1, 0);
  for (int v : b.members()) in[v] = 1;
  return in;
}

int neighbors_in_set(const Graph& g, const std::vector<char>& in, int v) {
  int cnt = 0;
  for (int u : g.neighbors(v)) cnt += in[u];
  return cnt;
}

// Induced subgraph of g on the members of b, with vertices reindexed 0..t-1.
struct Induced {
  std::vector<int> ids;                // index -> original id
  std::vector<std::vector<int>> adj;   // indices
};

Induced induce(const Graph& g, const VertexSubset& b) {
  Induced sub;
  sub.ids = b.members();
  int t = static_cast<int>(sub.ids.size());
  std::vector<int> pos(g.num_vertices() + 1, -1);
  for (int i = 0; i < t; ++i) pos[sub.ids[i]] = i;
  sub.adj.assign(t, {});
  for (int i = 0; i < t; ++i) {
    for (int u : g.neighbors(sub.ids[i])) {
      if (pos[u] >= 0) sub.adj[i].push_back(pos[u]);
    }
  }
  return sub;
}

// Component label per induced vertex, labels assigned in index order.
std::vector<int> induced_components(const Induced& sub) {
  int t = static_cast<int>(sub.ids.size());
  std::vector<int> label(t, -1);
  int next = 0;
  for (int s = 0; s < t; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : sub.adj[v]) {
        if (label[u] < 0) {
          label[u] = next;
          q.push(u);
        }
      }
    }
    ++next;
  }
  return label;
}

bool induced_connected(const Induced& sub) {
  if (sub.ids.size() <= 1) return true;
  auto label = induced_components(sub);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

// Maximum number of internally vertex-disjoint s-t paths in sub, computed as
// unit-capacity max flow on the vertex-split network (in-node 2i, out-node
// 2i+1). s and t keep unbounded through-capacity.
int disjoint_paths(const Induced& sub, int s, int t,
                   std::vector<std::vector<int>>& cap) {
  int n = static_cast<int>(sub.ids.size());
  int big = n + 1;
  int nodes = 2 * n;
  for (int i = 0; i < nodes; ++i) std::fill(cap[i].begin(), cap[i].end(), 0);
  for (int i = 0; i < n; ++i) cap[2 * i][2 * i + 1] = (i == s || i == t) ? big : 1;
  for (int i = 0; i < n; ++i) {
    for (int j : sub.adj[i]) {
      cap[2 * i + 1][2 * j] = big;
    }
  }
  int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[sink] < 0) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < nodes; ++u) {
        if (parent[u] < 0 && cap[v][u] > 0) {
          parent[u] = v;
          q.push(u);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int v = sink; v != source; v = parent[v]) {
      cap[parent[v]][v] -= 1;
      cap[v][parent[v]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSubset& b) {
  return is_m_dominating(g, b, 1);
}

bool is_m_dominating(const Graph& g, const VertexSubset& b, int m) {
  if (m < 1) throw InputError("domination multiplicity m must be >= 1");
  require_subset_of(g, b);
  auto in = membership(g, b);
  for (int v = 1; v <= g.num_vertices(); ++v) {
    if (in[v]) continue;
    if (neighbors_in_set(g, in, v) < m) return false;
  }
  return true;
}

bool is_connected_subset(const Graph& g, const VertexSubset& b) {
  if (b.empty()) throw InputError("connectivity of an empty set is undefined");
  require_subset_of(g, b);
  return induced_connected(induce(g, b));
}

int subset_connectivity(const Graph& g, const VertexSubset& b) {
  if (b.empty()) throw InputError("connectivity of an empty set is undefined");
  require_subset_of(g, b);
  auto sub = induce(g, b);
  int t = static_cast<int>(sub.ids.size());
  if (t == 1) return 0;
  if (!induced_connected(sub)) return 0;
  long long edge_count = 0;
  for (const auto& nb : sub.adj) edge_count += static_cast<long long>(nb.size());
  if (edge_count == static_cast<long long>(t) * (t - 1)) return t - 1;

  std::vector<std::vector<char>> adj_mat(t, std::vector<char>(t, 0));
  int min_deg = t;
  for (int i = 0; i < t; ++i) {
    for (int j : sub.adj[i]) adj_mat[i][j] = 1;
    min_deg = std::min(min_deg, static_cast<int>(sub.adj[i].size()));
  }
  int best = min_deg;
  std::vector<std::vector<int>> cap(2 * t, std::vector<int>(2 * t, 0));
  // A minimum separator has at most `best` vertices, so among sources
  // 0..best at least one lies outside of it; flows from that source to the
  // far side realize the minimum.
  for (int s = 0; s < t && s <= best; ++s) {
    for (int u = 0; u < t; ++u) {
      if (u == s || adj_mat[s][u]) continue;
      best = std::min(best, disjoint_paths(sub, s, u, cap));
    }
  }
  return best;
}

bool meets_connectivity_rule(const Graph& g, const VertexSubset& b, int k) {
  if (k <= 0) return true;
  if (b.empty()) return false;
  if (k == 1) return is_connected_subset(g, b);
  return b.size() >= 2 && subset_connectivity(g, b) >= k;
}

FeasibilityCertificate check_feasible(const Graph& g, const VertexSubset& b,
                                      int k, int m) {
  if (b.empty()) throw InputError("cannot certify an empty set");
  if (m < 1) throw InputError("domination multiplicity m must be >= 1");
  if (k < 0) throw InputError("connectivity requirement k must be >= 0");
  require_subset_of(g, b);

  FeasibilityCertificate cert;
  cert.m_checked = m;
  cert.k_required = k;
  cert.dominating = true;
  cert.m_dominating = true;

  auto in = membership(g, b);
  for (int v = 1; v <= g.num_vertices(); ++v) {
    if (in[v]) continue;
    int cnt = neighbors_in_set(g, in, v);
    if (cnt == 0) cert.dominating = false;
    if (cnt < m) {
      cert.m_dominating = false;
      cert.violations.push_back(
          {v, "adjacent to " + std::to_string(cnt) + " of " +
                  std::to_string(m) + " required dominators"});
    }
  }

  auto sub = induce(g, b);
  cert.connected = induced_connected(sub);
  cert.connectivity = subset_connectivity(g, b);

  bool k_ok = true;
  if (k == 1 && !cert.connected) {
    k_ok = false;
    auto label = induced_components(sub);
    int parts = 1 + *std::max_element(label.begin(), label.end());
    int witness = 0;
    for (int i = 0; i < static_cast<int>(label.size()); ++i) {
      if (label[i] == 1) {
        witness = sub.ids[i];
        break;
      }
    }
    cert.violations.push_back(
        {witness, "set induces " + std::to_string(parts) + " components"});
  } else if (k >= 2) {
    if (b.size() < 2) {
      k_ok = false;
      cert.violations.push_back(
          {0, "connectivity level " + std::to_string(k) +
                  " requires at least 2 vertices"});
    } else if (cert.connectivity < k) {
      k_ok = false;
      cert.violations.push_back(
          {0, "induced connectivity " + std::to_string(cert.connectivity) +
                  " below required " + std::to_string(k)});
    }
  }

  cert.feasible = cert.m_dominating && k_ok;
  return cert;
}

}  // namespace domset
