#include <string>
#include <vector>

#include "doctest.h"
#include "domset/errors.hpp"
#include "domset/weights.hpp"
#include "test_support.hpp"

using namespace domset;
using namespace domset::test;

TEST_CASE("parse_positive_decimal handles integers and fractions") {
  auto p = parse_positive_decimal("4");
  CHECK(p.exact);
  CHECK(p.units == 4);
  CHECK(p.scale == 1);

  p = parse_positive_decimal("0.25");
  CHECK(p.exact);
  CHECK(p.units == 25);
  CHECK(p.scale == 100);

  // Trailing fractional zeros carry no value and do not widen the scale.
  p = parse_positive_decimal("12.500000");
  CHECK(p.exact);
  CHECK(p.scale == 10);
  CHECK(p.units == 125);
  CHECK(p.value == doctest::Approx(12.5));
}

TEST_CASE("parse_positive_decimal falls back past six fractional digits") {
  auto p = parse_positive_decimal("0.1234567");
  CHECK(!p.exact);
  CHECK(p.value == doctest::Approx(0.1234567));
}

TEST_CASE("parse_positive_decimal rejects malformed and nonpositive input") {
  for (const char* bad : {"", "abc", "1.2.3", "-1", "0", "0.0", "1e3", ".5",
                          "5.", "+2", "2 "}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_positive_decimal(bad), InputError);
  }
}

TEST_CASE("compare_weights is exact at matched scales") {
  WeightValue a{25, 100, true, 0.0};   // 0.25
  WeightValue b{3, 10, true, 0.0};     // 0.3
  CHECK(compare_weights(a, b) == -1);
  CHECK(compare_weights(b, a) == 1);
  CHECK(compare_weights(a, a) == 0);

  // 0.1 + 0.2 == 0.3 exactly in scaled-integer arithmetic.
  WeightValue sum{3, 10, true, 0.0};
  WeightValue parts{30, 100, true, 0.0};
  CHECK(compare_weights(sum, parts) == 0);
}

TEST_CASE("compare_weights tolerates tiny relative error when inexact") {
  WeightValue a{0, 1, false, 1.0};
  WeightValue b{0, 1, false, 1.0 + 1e-12};
  CHECK(compare_weights(a, b) == 0);
  WeightValue c{0, 1, false, 1.001};
  CHECK(compare_weights(a, c) == -1);
}

TEST_CASE("weight table totals stay exact") {
  auto w = WeightTable::from_text({"0.1", "0.2", "0.3"});
  CHECK(w.exact);
  auto t = w.total(vs({1, 2}));
  CHECK(t.exact);
  CHECK(compare_weights(t, WeightValue{3, 10, true, 0.0}) == 0);
  CHECK(w.at(3).value() == doctest::Approx(0.3));

  auto u = WeightTable::unit(4);
  CHECK(u.total(vs({1, 3, 4})) == WeightValue::integer(3));
  CHECK(u.at(2).integral());

  auto i = WeightTable::from_integers({5, 7});
  CHECK(i.total(VertexSubset::full(2)) == WeightValue::integer(12));
}

TEST_CASE("weight vector table scales per column") {
  auto w = WeightVectorTable::from_text({{"1", "0.5"}, {"2", "0.25"}});
  CHECK(w.mu == 2);
  CHECK(w.size() == 2);
  CHECK(w.exact);
  auto c0 = w.column(0);
  CHECK(c0.total(VertexSubset::full(2)) == WeightValue::integer(3));
  auto c1 = w.column(1);
  auto t = c1.total(VertexSubset::full(2));
  CHECK(t.value() == doctest::Approx(0.75));

  CHECK_THROWS_AS(w.to_scalar(), InputError);
  auto one = WeightVectorTable::from_integers({{4}, {9}});
  CHECK(one.to_scalar().total(VertexSubset::full(2)) ==
        WeightValue::integer(13));
}

TEST_CASE("ragged weight rows are rejected") {
  CHECK_THROWS_AS(WeightVectorTable::from_text({{"1", "2"}, {"3"}}),
                  InputError);
}
