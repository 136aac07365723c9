#include "domset/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "domset/errors.hpp"

namespace domset {

namespace {

constexpr int kMaxExactFractionDigits = 6;
constexpr long long kMaxWeightUnits = 1'000'000'000'000'000LL;

long long pow10ll(int e) {
  long long r = 1;
  while (e-- > 0) r *= 10;
  return r;
}

}  // namespace

int compare_weights(const WeightValue& a, const WeightValue& b) {
  if (a.exact && b.exact && a.scale == b.scale) {
    if (a.units < b.units) return -1;
    if (a.units > b.units) return 1;
    return 0;
  }
  double x = a.value(), y = b.value();
  double tol = 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
  if (std::fabs(x - y) <= tol) return 0;
  return x < y ? -1 : 1;
}

ParsedDecimal parse_positive_decimal(std::string_view text) {
  if (text.empty()) throw InputError("empty weight value");
  std::string_view int_part = text, frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (int_part.empty() || frac_part.empty())
      throw InputError("malformed decimal '" + std::string(text) + "'");
  }
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part)))
    throw InputError("malformed decimal '" + std::string(text) + "'");

  // Trailing zeros in the fraction carry no value.
  while (!frac_part.empty() && frac_part.back() == '0')
    frac_part.remove_suffix(1);

  ParsedDecimal out;
  out.value = std::strtod(std::string(text).c_str(), nullptr);
  if (static_cast<int>(frac_part.size()) > kMaxExactFractionDigits) {
    out.exact = false;
  } else {
    long long ip = 0, fp = 0;
    auto r1 = std::from_chars(int_part.data(), int_part.data() + int_part.size(), ip);
    if (r1.ec != std::errc()) throw InputError("weight out of range '" + std::string(text) + "'");
    if (!frac_part.empty()) {
      auto r2 = std::from_chars(frac_part.data(), frac_part.data() + frac_part.size(), fp);
      if (r2.ec != std::errc()) throw InputError("weight out of range '" + std::string(text) + "'");
    }
    out.scale = pow10ll(static_cast<int>(frac_part.size()));
    if (ip > kMaxWeightUnits / out.scale)
      throw InputError("weight out of range '" + std::string(text) + "'");
    out.units = ip * out.scale + fp;
  }
  if (out.value <= 0.0 || (out.exact && out.units <= 0))
    throw InputError("weights must be strictly positive, got '" +
                     std::string(text) + "'");
  return out;
}

WeightValue WeightTable::at(int v) const {
  if (v < 1 || v > size())
    throw InputError("weight index out of range: " + std::to_string(v));
  if (exact) return {units[v - 1], scale, true, 0.0};
  return {0, 1, false, raw[v - 1]};
}

WeightValue WeightTable::total(const VertexSubset& b) const {
  if (!b.empty() && b.members().back() > size())
    throw InputError("weight index out of range: " +
                     std::to_string(b.members().back()));
  if (exact) {
    long long sum = 0;
    for (int v : b.members()) sum += units[v - 1];
    return {sum, scale, true, 0.0};
  }
  double sum = 0;
  for (int v : b.members()) sum += raw[v - 1];
  return {0, 1, false, sum};
}

WeightTable WeightTable::from_integers(const std::vector<long long>& vals) {
  WeightTable t;
  for (long long v : vals) {
    if (v <= 0) throw InputError("weights must be strictly positive");
    t.raw.push_back(static_cast<double>(v));
    t.units.push_back(v);
  }
  return t;
}

WeightTable WeightTable::from_text(const std::vector<std::string>& vals) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(vals.size());
  for (const auto& v : vals) rows.push_back({v});
  return WeightVectorTable::from_text(rows).to_scalar();
}

WeightTable WeightTable::unit(int n) {
  return from_integers(std::vector<long long>(n, 1));
}

WeightTable WeightVectorTable::column(int idx) const {
  if (idx < 0 || idx >= mu) throw InputError("criterion index out of range");
  WeightTable t;
  t.exact = exact;
  t.scale = exact ? col_scale[idx] : 1;
  for (int i = 0; i < size(); ++i) {
    t.raw.push_back(raw[i][idx]);
    if (exact) t.units.push_back(units[i][idx]);
  }
  return t;
}

WeightTable WeightVectorTable::to_scalar() const {
  if (mu != 1)
    throw InputError("expected a single weight per vertex, table has " +
                     std::to_string(mu) + " criteria");
  return column(0);
}

WeightVectorTable WeightVectorTable::from_integers(
    const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<std::string>> text;
  text.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::string> r;
    for (long long v : row) r.push_back(std::to_string(v));
    text.push_back(std::move(r));
  }
  return from_text(text);
}

WeightVectorTable WeightVectorTable::from_text(
    const std::vector<std::vector<std::string>>& rows) {
  WeightVectorTable t;
  if (rows.empty()) throw InputError("weight table has no rows");
  t.mu = static_cast<int>(rows.front().size());
  if (t.mu < 1) throw InputError("weight table has no criteria");

  std::vector<std::vector<ParsedDecimal>> parsed;
  parsed.reserve(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t.mu)
      throw InputError("weight row has " + std::to_string(row.size()) +
                       " values, expected " + std::to_string(t.mu));
    std::vector<ParsedDecimal> p;
    for (const auto& cell : row) p.push_back(parse_positive_decimal(cell));
    if (std::any_of(p.begin(), p.end(),
                    [](const ParsedDecimal& d) { return !d.exact; }))
      t.exact = false;
    parsed.push_back(std::move(p));
  }

  t.col_scale.assign(t.mu, 1);
  if (t.exact) {
    for (int j = 0; j < t.mu; ++j)
      for (const auto& row : parsed)
        t.col_scale[j] = std::max(t.col_scale[j], row[j].scale);
  }
  for (const auto& row : parsed) {
    std::vector<double> rv;
    std::vector<long long> uv;
    for (int j = 0; j < t.mu; ++j) {
      rv.push_back(row[j].value);
      if (t.exact) uv.push_back(row[j].units * (t.col_scale[j] / row[j].scale));
    }
    t.raw.push_back(std::move(rv));
    if (t.exact) t.units.push_back(std::move(uv));
  }
  return t;
}

}  // namespace domset
