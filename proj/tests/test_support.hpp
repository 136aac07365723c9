#pragma once

#include <utility>
#include <vector>

#include "domset/graph.hpp"

namespace domset::test {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  e.push_back({n, 1});
  return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

// Star K_{1,n-1}: center 1, leaves 2..n.
inline Graph star_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 2; v <= n; ++v) e.push_back({1, v});
  return Graph(n, std::move(e));
}

inline VertexSubset vs(std::vector<int> ids) {
  return VertexSubset(std::move(ids));
}

}  // namespace domset::test
