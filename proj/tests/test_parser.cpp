#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gerst/parser.hpp"

using namespace gerst;

namespace {
const TwistSpec kJordan{Rational(1), Rational(1)};
}

TEST_CASE("basic expressions") {
  RewriteEngine eng(kJordan);
  CHECK(parse_polynomial("y x", eng) == mono(1, 1) + mono(2, 0));
  CHECK(parse_polynomial("1", eng) == one());
  CHECK(parse_polynomial("3/2 x^2 y - y^3", eng) ==
        Rational(3, 2) * mono(2, 1) - mono(0, 3));
  CHECK(parse_polynomial("3/2x^2y-y^3+1", eng) ==
        Rational(3, 2) * mono(2, 1) - mono(0, 3) + one());
  CHECK(parse_polynomial("2*x*y", eng) == Rational(2) * mono(1, 1));
  CHECK(parse_polynomial("-x + x", eng).is_zero());
  CHECK(parse_polynomial("x y x", eng) ==
        mono(2, 1) + mono(3, 0));  // inner word normalized
}

TEST_CASE("errors carry a position") {
  RewriteEngine eng(kJordan);
  CHECK_THROWS_AS(parse_polynomial("x + ", eng), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z", eng), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", eng), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", eng), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", eng), ParseError);
  try {
    parse_polynomial("x + z", eng);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("formatting") {
  CHECK(format_polynomial(AlgebraElement()) == "0");
  CHECK(format_polynomial(one()) == "1");
  CHECK(format_polynomial(mono(1, 1) + mono(2, 0)) == "x y + x^2");
  CHECK(format_polynomial(-mono(0, 1)) == "-y");
  CHECK(format_polynomial(Rational(3, 2) * mono(2, 1) - mono(0, 3) + one()) ==
        "1 - y^3 + 3/2 x^2 y");
  CHECK(format_polynomial_op(op_mono(1, 1) - op_mono(0, 2)) == "-x^2 + y x");
}

TEST_CASE("round trip on random elements") {
  RewriteEngine eng(kJordan);
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> nterms(1, 5), expo(0, 3), num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement e;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      int i = expo(rng), j = expo(rng);
      if (i + j > 6) continue;
      e.add(Monomial{i, j}, Rational(num(rng), den(rng)));
    }
    CHECK(parse_polynomial(format_polynomial(e), eng) == e);
  }
}
