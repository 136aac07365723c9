#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

// Objective value. Decimal weights with at most 6 fractional digits are kept
// as integers scaled by a power of ten, so sums and comparisons stay exact.
// Anything finer falls back to doubles with a 1e-9 relative tolerance.
struct WeightValue {
  long long units = 0;
  long long scale = 1;
  bool exact = true;
  double approx = 0.0;

  double value() const {
    return exact ? static_cast<double>(units) / static_cast<double>(scale)
                 : approx;
  }
  bool integral() const { return exact && units % scale == 0; }

  static WeightValue integer(long long v) { return {v, 1, true, 0.0}; }

  friend bool operator==(const WeightValue&, const WeightValue&) = default;
};

// -1 / 0 / +1; exact values at equal scale compare as integers, otherwise
// doubles with relative tolerance 1e-9.
int compare_weights(const WeightValue& a, const WeightValue& b);

// One strictly positive decimal weight per vertex.
struct WeightTable {
  std::vector<double> raw;
  std::vector<long long> units;  // meaningful only when exact
  long long scale = 1;
  bool exact = true;

  int size() const { return static_cast<int>(raw.size()); }
  WeightValue at(int v) const;  // 1-based
  WeightValue total(const VertexSubset& b) const;

  static WeightTable from_integers(const std::vector<long long>& vals);
  static WeightTable from_text(const std::vector<std::string>& vals);
  static WeightTable unit(int n);
};

// mu strictly positive decimal weights per vertex, scaled per criterion.
struct WeightVectorTable {
  int mu = 0;
  std::vector<std::vector<double>> raw;        // n rows of mu values
  std::vector<std::vector<long long>> units;   // meaningful when exact
  std::vector<long long> col_scale;            // per criterion
  bool exact = true;

  int size() const { return static_cast<int>(raw.size()); }
  WeightTable column(int idx) const;  // 0-based criterion
  WeightTable to_scalar() const;      // requires mu == 1

  static WeightVectorTable from_integers(
      const std::vector<std::vector<long long>>& rows);
  static WeightVectorTable from_text(
      const std::vector<std::vector<std::string>>& rows);
};

struct ParsedDecimal {
  long long units = 0;
  long long scale = 1;
  double value = 0.0;
  bool exact = true;  // false when more than 6 fractional digits
};

// Accepts plain decimals like "4", "0.25", "12.500000". Throws InputError on
// anything else or on values <= 0.
ParsedDecimal parse_positive_decimal(std::string_view text);

}  // namespace domset
