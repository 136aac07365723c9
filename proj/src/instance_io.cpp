#include "domset/instance_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "domset/errors.hpp"

namespace domset {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Significant lines only: blanks and full '#' comments are dropped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos)
      text.erase(hash);
    std::istringstream row(text);
    Line line;
    line.number = number;
    std::string tok;
    while (row >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const Line& line, const std::string& tok,
                    const std::string& role) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    fail(line.number, role + " '" + tok + "' is not an integer");
  return value;
}

struct EdgeReader {
  int n = 0;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;

  void add(const Line& line, const std::string& ut, const std::string& vt) {
    int u = static_cast<int>(parse_int(line, ut, "endpoint"));
    int v = static_cast<int>(parse_int(line, vt, "endpoint"));
    for (int w : {u, v})
      if (w < 1 || w > n)
        fail(line.number, "vertex " + std::to_string(w) + " outside 1.." +
                              std::to_string(n));
    if (u == v)
      fail(line.number,
           "edge " + std::to_string(u) + " " + std::to_string(v) +
               " is a self-loop");
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second)
      fail(line.number, "duplicate edge " + std::to_string(e.first) + " " +
                            std::to_string(e.second));
    edges.push_back(e);
  }
};

Graph read_plain(const std::vector<Line>& lines) {
  const Line& head = lines.front();
  if (head.tokens.size() != 2)
    fail(head.number, "expected 'n m' header");
  long long n = parse_int(head, head.tokens[0], "vertex count");
  long long m = parse_int(head, head.tokens[1], "edge count");
  if (n < 1) fail(head.number, "vertex count must be >= 1");
  if (m < 0) fail(head.number, "edge count must be >= 0");

  EdgeReader reader;
  reader.n = static_cast<int>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (static_cast<long long>(reader.edges.size()) == m)
      fail(line.number, "unexpected content after " + std::to_string(m) +
                            " edges");
    if (line.tokens.size() != 2) fail(line.number, "expected 'u v' edge");
    reader.add(line, line.tokens[0], line.tokens[1]);
  }
  if (static_cast<long long>(reader.edges.size()) != m)
    throw InputError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(reader.edges.size()));
  return Graph(reader.n, std::move(reader.edges));
}

Graph read_dimacs(const std::vector<Line>& lines) {
  long long m = -1;
  EdgeReader reader;
  for (const Line& line : lines) {
    const std::string& kind = line.tokens[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (m >= 0) fail(line.number, "repeated problem line");
      if (line.tokens.size() != 4)
        fail(line.number, "expected 'p edge n m'");
      long long n = parse_int(line, line.tokens[2], "vertex count");
      m = parse_int(line, line.tokens[3], "edge count");
      if (n < 1) fail(line.number, "vertex count must be >= 1");
      if (m < 0) fail(line.number, "edge count must be >= 0");
      reader.n = static_cast<int>(n);
    } else if (kind == "e") {
      if (m < 0) fail(line.number, "edge before problem line");
      if (static_cast<long long>(reader.edges.size()) == m)
        fail(line.number, "unexpected content after " + std::to_string(m) +
                              " edges");
      if (line.tokens.size() != 3) fail(line.number, "expected 'e u v'");
      reader.add(line, line.tokens[1], line.tokens[2]);
    } else {
      fail(line.number, "unknown line type '" + kind + "'");
    }
  }
  if (m < 0) throw InputError("missing problem line");
  if (static_cast<long long>(reader.edges.size()) != m)
    throw InputError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(reader.edges.size()));
  return Graph(reader.n, std::move(reader.edges));
}

[[noreturn]] void rethrow_with_path(const std::string& path,
                                    const InputError& e) {
  throw InputError(path + ": " + e.what());
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw InputError("graph file is empty");
  const std::string& first = lines.front().tokens.front();
  // DIMACS lines are keyed by a letter; the plain header starts with n.
  if (first == "c" || first == "p" || first == "e") return read_dimacs(lines);
  return read_plain(lines);
}

Graph read_graph_file(const std::string& path) {
  auto in = open_file(path);
  try {
    return read_graph(in);
  } catch (const InputError& e) {
    rethrow_with_path(path, e);
  }
}

WeightVectorTable read_weights(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw InputError("weights file is empty");
  std::vector<std::vector<std::string>> rows;
  for (const Line& line : lines) {
    if (line.tokens.size() != lines.front().tokens.size())
      fail(line.number, "row has " + std::to_string(line.tokens.size()) +
                            " columns, expected " +
                            std::to_string(lines.front().tokens.size()));
    for (const std::string& tok : line.tokens) {
      try {
        parse_positive_decimal(tok);
      } catch (const InputError& e) {
        fail(line.number, e.what());
      }
    }
    rows.push_back(line.tokens);
  }
  return WeightVectorTable::from_text(rows);
}

WeightVectorTable read_weights_file(const std::string& path) {
  auto in = open_file(path);
  try {
    return read_weights(in);
  } catch (const InputError& e) {
    rethrow_with_path(path, e);
  }
}

EstimateTable read_estimates(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw InputError("estimates file is empty");
  const Line& head = lines.front();
  if (head.tokens.size() != 2)
    fail(head.number, "expected 'l eta' header");
  long long l = parse_int(head, head.tokens[0], "scale length");
  long long eta = parse_int(head, head.tokens[1], "cardinality");
  if (l < 1) fail(head.number, "scale length must be >= 1");
  if (eta < 1) fail(head.number, "cardinality must be >= 1");

  EstimateTable table;
  table.l = static_cast<int>(l);
  table.eta = static_cast<int>(eta);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != static_cast<std::size_t>(l))
      fail(line.number, "row has " + std::to_string(line.tokens.size()) +
                            " columns, expected " + std::to_string(l) +
                            " level counts");
    std::vector<int> counts;
    for (const std::string& tok : line.tokens)
      counts.push_back(static_cast<int>(parse_int(line, tok, "level count")));
    IntervalMultisetEstimate row;
    try {
      row = IntervalMultisetEstimate::from_counts(table.l, std::move(counts));
    } catch (const InputError& e) {
      fail(line.number, e.what());
    }
    if (row.eta != table.eta)
      fail(line.number, "row holds " + std::to_string(row.eta) +
                            " elements, header says " +
                            std::to_string(table.eta));
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw InputError("estimates file has no rows");
  return table;
}

EstimateTable read_estimates_file(const std::string& path) {
  auto in = open_file(path);
  try {
    return read_estimates(in);
  } catch (const InputError& e) {
    rethrow_with_path(path, e);
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_weight_rows(std::ostream& out,
                       const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

void write_estimates(std::ostream& out, const EstimateTable& est) {
  out << est.l << ' ' << est.eta << '\n';
  for (const auto& row : est.rows) {
    for (int j = 0; j < est.l; ++j) {
      if (j) out << ' ';
      out << row.counts[j];
    }
    out << '\n';
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("cannot write file: " + path);
}

InstanceBundle load_bundle(const std::string& graph_path,
                           const std::string& weights_path,
                           const std::string& estimates_path) {
  InstanceBundle bundle;
  bundle.graph = read_graph_file(graph_path);
  bundle.meta.name = graph_path;
  bundle.meta.source = graph_path;
  int n = bundle.graph.num_vertices();
  if (!weights_path.empty()) {
    bundle.weights = read_weights_file(weights_path);
    if (bundle.weights->size() != n)
      throw InputError(weights_path + ": " +
                       std::to_string(bundle.weights->size()) +
                       " weight rows for a graph with " + std::to_string(n) +
                       " vertices");
  }
  if (!estimates_path.empty()) {
    bundle.estimates = read_estimates_file(estimates_path);
    if (bundle.estimates->size() != n)
      throw InputError(estimates_path + ": " +
                       std::to_string(bundle.estimates->size()) +
                       " estimate rows for a graph with " + std::to_string(n) +
                       " vertices");
  }
  return bundle;
}

VertexSubset parse_set_csv(const std::string& text) {
  std::vector<int> ids;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream item(tok);
    std::string word;
    if (!(item >> word))
      throw InputError("empty entry in vertex list '" + text + "'");
    std::string extra;
    if (item >> extra)
      throw InputError("bad entry '" + tok + "' in vertex list");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size())
      throw InputError("'" + word + "' is not a vertex id");
    ids.push_back(static_cast<int>(v));
  }
  if (ids.empty()) throw InputError("vertex list is empty");
  return VertexSubset(std::move(ids));
}

}  // namespace domset
