#include "domset/graph.hpp"

#include <algorithm>
#include <queue>

#include "domset/errors.hpp"

namespace domset {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  adj_.assign(n_ + 1, {});
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw InputError("edge endpoint out of range: {" + std::to_string(u) +
                       "," + std::to_string(v) + "}");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    auto it = std::adjacent_find(edges_.begin(), edges_.end());
    throw InputError("duplicate edge {" + std::to_string(it->first) + "," +
                     std::to_string(it->second) + "}");
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::require_vertex(int v) const {
  if (v < 1 || v > n_)
    throw InputError("vertex id out of range: " + std::to_string(v));
}

const std::vector<int>& Graph::neighbors(int v) const {
  require_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_ + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  return reached == n_;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n_ + 1, 0);
  for (int s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : adj_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSubset::VertexSubset(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InputError("duplicate vertex in set");
  if (!ids_.empty() && ids_.front() < 1)
    throw InputError("vertex id out of range: " + std::to_string(ids_.front()));
}

VertexSubset VertexSubset::full(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  return VertexSubset(std::move(ids));
}

bool VertexSubset::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::string to_string(const VertexSubset& b) {
  std::string out;
  for (int v : b.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void require_subset_of(const Graph& g, const VertexSubset& b) {
  if (!b.empty() && b.members().back() > g.num_vertices())
    throw InputError("vertex id out of range: " +
                     std::to_string(b.members().back()));
}

}  // namespace domset
