#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/msest.hpp"
#include "domset/weights.hpp"

namespace domset {

struct InstanceMeta {
  std::string name;
  std::uint64_t seed = 0;
  std::string source;  // path the graph came from, empty for generated ones
};

// A graph plus whatever side tables a command needs. Row counts are checked
// against the vertex count on load.
struct InstanceBundle {
  Graph graph;
  std::optional<WeightVectorTable> weights;
  std::optional<EstimateTable> estimates;
  InstanceMeta meta;
};

// Empty paths skip the corresponding table.
InstanceBundle load_bundle(const std::string& graph_path,
                           const std::string& weights_path = "",
                           const std::string& estimates_path = "");

// Graph files come in two layouts, detected by the first significant line
// (blank lines and '#' comments are skipped):
//
//   plain           DIMACS-style
//   -----           ------------
//   n m             c comment
//   u v             p edge n m
//   ...             e u v
//
// Errors carry 1-based line numbers. The *_file variants prefix the path.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// One row per vertex, one or more positive decimal columns per row; every
// row must have the same number of columns.
WeightVectorTable read_weights(std::istream& in);
WeightVectorTable read_weights_file(const std::string& path);

// Header line "l eta", then one row of l level counts (position form) per
// vertex; each row must sum to eta.
EstimateTable read_estimates(std::istream& in);
EstimateTable read_estimates_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_weight_rows(std::ostream& out,
                       const std::vector<std::vector<std::string>>& rows);
void write_estimates(std::ostream& out, const EstimateTable& est);

void write_text_file(const std::string& path, const std::string& content);

// "2,5,7" (spaces allowed) to a vertex set.
VertexSubset parse_set_csv(const std::string& text);

}  // namespace domset
