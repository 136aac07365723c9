#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace domset {

// Undirected simple graph on vertices 1..n. Edges are stored normalized
// (smaller endpoint first) and sorted, so structurally equal graphs compare
// equal. Self-loops and duplicate edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return n_ == 0; }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_connected() const;
  // Connected components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;  // 1-based; adj_[0] unused
};

// Sorted, duplicate-free set of vertex ids. Ordering is lexicographic on the
// sorted id sequence; that is the canonical tie-break order used everywhere.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::vector<int> ids);

  static VertexSubset full(int n);

  const std::vector<int>& members() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(int v) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend std::strong_ordering operator<=>(const VertexSubset& a,
                                          const VertexSubset& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<int> ids_;
};

// "2 3 5" style rendering used by the CLI and error messages.
std::string to_string(const VertexSubset& b);

// Throws InputError unless every member of b is a vertex of g.
void require_subset_of(const Graph& g, const VertexSubset& b);

}  // namespace domset
