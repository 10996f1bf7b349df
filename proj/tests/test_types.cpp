#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcx/types.hpp"

using namespace dcx;

namespace {

VecZ vec2(long a, long b) {
  VecZ v(2);
  v << Int(a), Int(b);
  return v;
}

}  // namespace

TEST_CASE("rational strings render integers bare and fractions as p/q") {
  CHECK(rat_string(Rat(5)) == "5");
  CHECK(rat_string(Rat(-3)) == "-3");
  CHECK(rat_string(make_rat(Int(1), Int(2))) == "1/2");
  CHECK(rat_string(make_rat(Int(-4), Int(6))) == "-2/3");
  CHECK(rat_string(Rat(0)) == "0");
}

TEST_CASE("parse_rat round-trips and normalizes sign") {
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("3/6") == make_rat(Int(1), Int(2)));
  CHECK(parse_rat("-3/6") == make_rat(Int(-1), Int(2)));
  CHECK(rat_string(parse_rat("22/7")) == "22/7");
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/"), std::invalid_argument);
}

TEST_CASE("floor and ceil agree with exact division on negatives") {
  CHECK(floor_int(make_rat(Int(7), Int(2))) == 3);
  CHECK(floor_int(make_rat(Int(-7), Int(2))) == -4);
  CHECK(ceil_int(make_rat(Int(7), Int(2))) == 4);
  CHECK(ceil_int(make_rat(Int(-7), Int(2))) == -3);
  CHECK(floor_int(Rat(5)) == 5);
  CHECK(ceil_int(Rat(5)) == 5);
}

TEST_CASE("primitive divides out the gcd and clears denominators") {
  CHECK(primitive(vec2(2, 4)) == vec2(1, 2));
  CHECK(primitive(vec2(-2, -4)) == vec2(-1, -2));
  CHECK(primitive(vec2(0, 0)) == vec2(0, 0));
  VecQ q(2);
  q << make_rat(Int(1), Int(2)), make_rat(Int(1), Int(3));
  CHECK(primitive(q) == vec2(3, 2));
}

TEST_CASE("line_representative fixes the sign of the first nonzero entry") {
  CHECK(line_representative(vec2(-2, 4)) == vec2(1, -2));
  CHECK(line_representative(vec2(2, -4)) == vec2(1, -2));
  CHECK(line_representative(vec2(0, -3)) == vec2(0, 1));
}

TEST_CASE("lexicographic order and canonical column sorting") {
  CHECK(lex_less(vec2(0, 1), vec2(1, 0)));
  CHECK(!lex_less(vec2(1, 0), vec2(0, 1)));
  CHECK(!lex_less(vec2(1, 0), vec2(1, 0)));

  MatZ m(2, 4);
  m << Int(1), Int(0), Int(1), Int(0),  //
      Int(0), Int(1), Int(0), Int(-1);
  MatZ u = sorted_unique_columns(m);
  REQUIRE(u.cols() == 3);
  CHECK(u.col(0) == vec2(0, -1));
  CHECK(u.col(1) == vec2(0, 1));
  CHECK(u.col(2) == vec2(1, 0));
}

TEST_CASE("integer checks and conversions") {
  VecQ q(2);
  q << Rat(3), make_rat(Int(1), Int(2));
  CHECK(!is_integer(q));
  CHECK_THROWS_AS(to_int(q), std::invalid_argument);
  q[1] = Rat(-2);
  CHECK(is_integer(q));
  CHECK(to_int(q) == vec2(3, -2));
  CHECK(to_rat(vec2(3, -2)) == q);
}

TEST_CASE("matrix column helpers round-trip") {
  MatZ m(2, 3);
  m << Int(1), Int(2), Int(3),  //
      Int(4), Int(5), Int(6);
  auto cols = columns_of(m);
  REQUIRE(cols.size() == 3);
  CHECK(matrix_from_columns(cols, 2) == m);
}
