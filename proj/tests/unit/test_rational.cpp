#include "doctest.h"
#include "dwlab/rational.hpp"

#include <sstream>
#include <stdexcept>

using dwlab::Rational;
using dwlab::rat;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, 4) == rat(-1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));   // sign moves to the numerator
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(rat(0, 7) == rat(0));
  CHECK(rat(42, 6).num() == 7);
  CHECK(rat(42, 6).den() == 1);
  CHECK(rat(5, 15).num() == 1);
  CHECK(rat(5, 15).den() == 3);
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
  CHECK(rat(5, 6) * rat(3, 10) == rat(1, 4));
  CHECK(rat(5, 6) / rat(5, 3) == rat(1, 2));
  CHECK(-rat(3, 7) == rat(-3, 7));
  CHECK(rat(1, 3) + rat(2, 3) == rat(1));
  // The chained expression every loss computation runs through.
  CHECK(rat(5, 6) + rat(5, 6) + rat(0) - rat(1) == rat(2, 3));
}

TEST_CASE("comparisons") {
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(rat(-1, 2) < rat(0));
  CHECK(rat(7, 24) <= rat(7, 24));
  CHECK(rat(3, 8) > rat(1, 3));
  CHECK(rat(2) >= rat(2));
  CHECK_FALSE(rat(1, 2) < rat(1, 2));
}

TEST_CASE("infinity conventions") {
  const Rational inf = Rational::infinity();
  CHECK(inf.is_infinite());
  CHECK(inf.inverse() == rat(0));          // 1/inf = 0
  CHECK(rat(0).inverse().is_infinite());   // 1/0 = inf
  CHECK(rat(100000) < inf);
  CHECK(inf == Rational::infinity());
  CHECK(inf + rat(5) == inf);
  CHECK(inf.str() == "inf");
  CHECK(rat(2, 3).inverse() == rat(3, 2));
}

TEST_CASE("parse and format round-trip") {
  CHECK(Rational::parse("5/6") == rat(5, 6));
  CHECK(Rational::parse("-3/7") == rat(-3, 7));
  CHECK(Rational::parse("4") == rat(4));
  CHECK(Rational::parse(" 2/4 ") == rat(1, 2));
  CHECK(Rational::parse("inf").is_infinite());
  CHECK(rat(5, 6).str() == "5/6");
  CHECK(rat(-1, 2).str() == "-1/2");
  CHECK(rat(7).str() == "7");          // integers print without a denominator
  CHECK(rat(0).str() == "0");
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  std::ostringstream os;
  os << rat(21, 4);
  CHECK(os.str() == "21/4");
}

TEST_CASE("to_double") {
  CHECK(rat(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(rat(-1, 4).to_double() == doctest::Approx(-0.25));
  CHECK(Rational::infinity().to_double() > 1e300);
}

TEST_CASE("large intermediates stay exact") {
  // d^3-scale numbers show up in the auxiliary space table; products of such
  // rationals must reduce without overflow.
  const Rational a(2000000000LL - 7, 999983);  // ~1e9 over a prime
  CHECK(a * a.inverse() == rat(1));
  CHECK(rat(1, 1000003) + rat(1, 1000033) == rat(2000036LL, 1000003LL * 1000033LL));
}

}  // TEST_SUITE
