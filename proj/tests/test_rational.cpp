#include <doctest.h>

#include <random>

#include "raag1d/errors.hpp"
#include "raag1d/rational.hpp"

using raag1d::Rational;

namespace {

// GMP is the reference for every operation.
mpq_class ref(const Rational& q) { return q.to_mpq(); }

Rational random_rational(std::mt19937_64& rng) {
  // Mix tiny values, values near the 63-bit boundary, and huge ones.
  switch (rng() % 4) {
    case 0:
      return raag1d::ratio(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 16));
    case 1:
      return raag1d::ratio(static_cast<long>(rng() >> 1) * (rng() % 2 ? 1 : -1), 1 + static_cast<long>(rng() >> 2));
    case 2: {
      mpz_class n(std::to_string(rng()) + std::to_string(rng()), 10);
      mpz_class d(std::to_string(1 + rng() % 1000) + std::to_string(rng()), 10);
      return Rational(rng() % 2 ? n : mpz_class(-n), d);
    }
    default:
      return Rational(static_cast<long>(rng() >> 1));
  }
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(raag1d::ratio(2, 4) == raag1d::ratio(1, 2));
    CHECK(raag1d::ratio(3, -6) == raag1d::ratio(-1, 2));
    CHECK(raag1d::to_string(raag1d::ratio(6, 3)) == "2");
    CHECK(raag1d::to_string(raag1d::ratio(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(raag1d::ratio(1, 0), raag1d::Error);
  }

  TEST_CASE("parse") {
    CHECK(raag1d::parse_rational(" 3/9 ") == raag1d::ratio(1, 3));
    CHECK(raag1d::parse_rational("-7") == Rational(-7));
    CHECK(raag1d::parse_rational("+4/8") == raag1d::ratio(1, 2));
    CHECK(raag1d::parse_rational("123456789012345678901234567890/2").to_mpq() ==
          mpq_class("61728394506172839450617283945"));
    CHECK_THROWS_AS(raag1d::parse_rational("1/0"), raag1d::Error);
    CHECK_THROWS_AS(raag1d::parse_rational("1/-2"), raag1d::Error);
    CHECK_THROWS_AS(raag1d::parse_rational("x"), raag1d::Error);
    CHECK_THROWS_AS(raag1d::parse_rational(""), raag1d::Error);
  }

  TEST_CASE("floor and frac") {
    CHECK(raag1d::floor(raag1d::ratio(-1, 3)) == Rational(-1));
    CHECK(raag1d::floor(raag1d::ratio(7, 2)) == Rational(3));
    CHECK(raag1d::frac(raag1d::ratio(-1, 3)) == raag1d::ratio(2, 3));
    CHECK(raag1d::frac(Rational(5)) == Rational(0));
  }

  TEST_CASE("division by zero throws") { CHECK_THROWS(Rational(1) / Rational(0)); }

  TEST_CASE("arithmetic agrees with GMP across the small/big boundary") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
      const Rational a = random_rational(rng), b = random_rational(rng);
      REQUIRE((a + b).to_mpq() == ref(a) + ref(b));
      REQUIRE((a - b).to_mpq() == ref(a) - ref(b));
      REQUIRE((a * b).to_mpq() == ref(a) * ref(b));
      if (b != 0) REQUIRE((a / b).to_mpq() == ref(a) / ref(b));
      REQUIRE((a < b) == (ref(a) < ref(b)));
      REQUIRE((a == b) == (ref(a) == ref(b)));
      REQUIRE((-a).to_mpq() == -ref(a));
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), ref(a).get_num_mpz_t(), ref(a).get_den_mpz_t());
      REQUIRE(raag1d::floor(a).to_mpq() == mpq_class(fl));
      REQUIRE(raag1d::to_string(a) == ref(a).get_str(10));
      // Equality is structural, so a value that returns to small range must
      // compare equal to its small spelling.
      REQUIRE((a + b) - b == a);
    }
  }
}
