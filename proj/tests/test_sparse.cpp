#include "doctest.h"

#include <string>

#include "antisgd/sparse_vector.hpp"
#include "antisgd/text_format.hpp"

using namespace antisgd;

TEST_CASE("sparse vector construction validates and canonicalizes") {
  SparseVector v({{1, 2.0}, {3, 0.0}, {7, -1.5}}, 10);
  CHECK(v.nnz() == 2);  // zero entry dropped
  CHECK(v.entries()[0].index == 1);
  CHECK(v.entries()[1].index == 7);
  CHECK(v.dim() == 10);
  CHECK(v.norm_sq() == doctest::Approx(4.0 + 2.25));

  CHECK_THROWS_AS(SparseVector({{0, 1.0}}, 5), dimension_error);
  CHECK_THROWS_AS(SparseVector({{-2, 1.0}}, 5), dimension_error);
  CHECK_THROWS_AS(SparseVector({{2, 1.0}, {2, 3.0}}, 5), dimension_error);
  CHECK_THROWS_AS(SparseVector({{3, 1.0}, {2, 3.0}}, 5), dimension_error);
  CHECK_THROWS_AS(SparseVector({{6, 1.0}}, 5), dimension_error);
  CHECK_THROWS_AS(SparseVector({}, 0), dimension_error);
}

TEST_CASE("sparse dot merges sorted supports") {
  SparseVector a({{1, 1.0}, {3, 2.0}, {5, -1.0}}, 6);
  SparseVector b({{2, 4.0}, {3, 0.5}, {5, 2.0}}, 6);
  CHECK(dot(a, b) == doctest::Approx(2.0 * 0.5 - 1.0 * 2.0));
  CHECK(dot(a, b) == dot(b, a));  // same merge order: bitwise commutative

  SparseVector disjoint({{2, 7.0}}, 6);
  CHECK(dot(a, disjoint) == 0.0);
  CHECK(dot(a, SparseVector()) == 0.0);
  CHECK(dot(a, a) == doctest::Approx(a.norm_sq()));
}

TEST_CASE("dense_dot and axpy address 1-based indices") {
  SparseVector x({{2, 3.0}, {4, -1.0}}, 4);
  DenseVector w{1.0, 2.0, 3.0, 4.0};
  CHECK(dense_dot(w, x) == doctest::Approx(2.0 * 3.0 + 4.0 * -1.0));

  axpy(2.0, x, w);
  CHECK(w == DenseVector{1.0, 8.0, 3.0, 2.0});

  DenseVector too_short{1.0};
  CHECK_THROWS_AS(dense_dot(too_short, x), dimension_error);
  CHECK_THROWS_AS(axpy(1.0, x, std::span<double>(too_short)),
                  dimension_error);
}

TEST_CASE("format_double is shortest exact round trip") {
  for (double v : {0.0, 1.0, 0.1, -1e-300, 3.141592653589793, 1e300,
                   4.5397868702434395e-05, 1.0 / 3.0, -7.25}) {
    const std::string s = format_double(v);
    auto back = parse_double(s);
    REQUIRE(back.has_value());
    CHECK(*back == v);
    CHECK(format_double(*back) == s);  // idempotent
  }
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(42.0) == "42");
}

TEST_CASE("parsers demand full tokens") {
  CHECK(parse_double("+1.5").value() == 1.5);
  CHECK(parse_double("-2e3").value() == -2000.0);
  CHECK_FALSE(parse_double("1.5x").has_value());
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double(" 1").has_value());
  CHECK(parse_int("42").value() == 42);
  CHECK(parse_int("+7").value() == 7);
  CHECK(parse_int("-3").value() == -3);
  CHECK_FALSE(parse_int("7.5").has_value());
  CHECK_FALSE(parse_int("x").has_value());
  CHECK_FALSE(parse_int("").has_value());
}
