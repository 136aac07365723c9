#pragma once

#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

// One failed check. vertex = 0 marks a set-level violation (connectivity).
struct Violation {
  int vertex = 0;
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityCertificate {
  bool dominating = false;    // every outside vertex has >= 1 neighbor in set
  bool m_dominating = false;  // every outside vertex has >= m neighbors in set
  int m_checked = 1;
  bool connected = false;     // induced subgraph connected (singleton: yes)
  int connectivity = 0;       // vertex connectivity of the induced subgraph
  int k_required = 1;
  bool feasible = false;      // m_dominating && connectivity rule for k
  std::vector<Violation> violations;

  friend bool operator==(const FeasibilityCertificate&,
                         const FeasibilityCertificate&) = default;
};

bool is_dominating(const Graph& g, const VertexSubset& b);

// Every vertex outside b has at least m neighbors inside b. m = 1 coincides
// with is_dominating.
bool is_m_dominating(const Graph& g, const VertexSubset& b, int m);

// Induced subgraph G[b] connected; singletons count as connected.
// Empty b is an input error.
bool is_connected_subset(const Graph& g, const VertexSubset& b);

// Vertex connectivity of G[b]: 0 for singletons and disconnected sets,
// t - 1 for an induced complete graph on t vertices, otherwise the minimum
// over non-adjacent pairs of the number of internally vertex-disjoint paths
// inside G[b].
int subset_connectivity(const Graph& g, const VertexSubset& b);

// Connectivity requirement at level k: k <= 0 imposes nothing, k = 1 requires
// a connected induced subgraph (a singleton passes), k >= 2 requires at least
// two vertices and subset_connectivity >= k. Note a complete graph on k
// vertices has connectivity k - 1 and therefore fails level k.
bool meets_connectivity_rule(const Graph& g, const VertexSubset& b, int k);

// Full certificate for b against requirement (k, m). k = 0 certifies the
// domination-only family. b must be non-empty.
FeasibilityCertificate check_feasible(const Graph& g, const VertexSubset& b,
                                      int k, int m);

}  // namespace domset
