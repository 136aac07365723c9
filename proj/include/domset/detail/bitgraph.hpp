#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "domset/errors.hpp"
#include "domset/graph.hpp"

namespace domset::detail {

// Adjacency as one 64-bit neighbor mask per vertex (bit v-1 for vertex v).
// Only used by the enumeration-style solvers, which all cap n well below 64.
struct BitGraph {
  int n = 0;
  std::vector<std::uint64_t> nbr;  // open neighborhoods, index 0 unused
  std::uint64_t all = 0;

  static BitGraph from(const Graph& g) {
    BitGraph bg;
    bg.n = g.num_vertices();
    if (bg.n > 64) throw ResourceError("bitset solvers support at most 64 vertices");
    bg.nbr.assign(bg.n + 1, 0);
    for (auto [u, v] : g.edges()) {
      bg.nbr[u] |= std::uint64_t(1) << (v - 1);
      bg.nbr[v] |= std::uint64_t(1) << (u - 1);
    }
    bg.all = bg.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << bg.n) - 1;
    return bg;
  }
};

inline bool mask_m_dominated(const BitGraph& bg, std::uint64_t set, int m) {
  std::uint64_t outside = bg.all & ~set;
  while (outside) {
    int v = std::countr_zero(outside) + 1;
    outside &= outside - 1;
    if (std::popcount(bg.nbr[v] & set) < m) return false;
  }
  return true;
}

inline bool mask_connected(const BitGraph& bg, std::uint64_t set) {
  if (!set) return false;
  std::uint64_t seen = set & (~set + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      next |= bg.nbr[v];
    }
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

inline VertexSubset subset_from_mask(std::uint64_t mask) {
  std::vector<int> ids;
  while (mask) {
    ids.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return VertexSubset(std::move(ids));
}

// Lexicographic comparison of the ascending id sequences two masks encode:
// the canonical set order without materializing the sets.
inline int compare_masks_canonical(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  if (!a && !b) return 0;
  return !a ? -1 : 1;
}

}  // namespace domset::detail
