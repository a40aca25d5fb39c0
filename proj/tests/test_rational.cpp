#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lagq/factorials.hpp"
#include "lagq/rational.hpp"
#include "oracles.hpp"

using lagq::BigInt;
using lagq::Rational;

TEST_CASE("rational field arithmetic") {
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  REQUIRE(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  REQUIRE(Rational(1, 3) / Rational(2, 5) == Rational(5, 6));
  REQUIRE(-Rational(3, 7) == Rational(-3, 7));
  REQUIRE(Rational(1, 2) < Rational(2, 3));
  REQUIRE(Rational(-1, 2) > Rational(-2, 3));

  SECTION("division by zero is rejected") {
    REQUIRE_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
  }
}

TEST_CASE("rational normalization invariants") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(2, 4).numerator() == 1);
  REQUIRE(Rational(2, 4).denominator() == 2);
  REQUIRE(Rational(3, -6).to_string() == "-1/2");
  REQUIRE(Rational(0, 7).denominator() == 1);

  SECTION("results of random op chains stay in lowest terms") {
    std::mt19937 rng(20240817);
    Rational acc = 1;
    for (int i = 0; i < 300; ++i) {
      Rational r = oracles::random_rational(rng);
      switch (i % 4) {
        case 0: acc += r; break;
        case 1: acc -= r; break;
        case 2: acc *= r; break;
        default:
          if (!r.is_zero()) acc /= r;
      }
      REQUIRE(acc.denominator() > 0);
      REQUIRE(boost::multiprecision::gcd(boost::multiprecision::abs(acc.numerator()),
                                         acc.denominator()) == 1);
    }
  }
}

TEST_CASE("rational string round trip") {
  REQUIRE(Rational::parse("-1/3").to_string() == "-1/3");
  REQUIRE(Rational::parse("7").to_string() == "7");
  REQUIRE(Rational::parse("+7") == Rational(7));
  REQUIRE(Rational::parse("0.5") == Rational(1, 2));
  REQUIRE(Rational::parse("-1.25") == Rational(-5, 4));
  REQUIRE(Rational::parse(".5") == Rational(1, 2));
  REQUIRE(Rational::parse("2.") == Rational(2));
  REQUIRE(Rational::parse("6/4").to_string() == "3/2");
  REQUIRE(Rational::parse("-0.0") == Rational(0));

  SECTION("malformed inputs") {
    for (const char* bad : {"", "-", "1/", "/2", "1/2/3", "a", "1.2.3", "1e3", "1 / 2", "."})
      REQUIRE_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  }
}

TEST_CASE("rising and falling factorials") {
  REQUIRE(lagq::rising_factorial(Rational(-3), 2) == Rational(6));
  REQUIRE(lagq::rising_factorial(Rational(9, 7), 0) == Rational(1));
  REQUIRE(lagq::rising_factorial(Rational(1, 2), 3) == Rational(15, 8));
  REQUIRE(lagq::falling_factorial(Rational(5), 2) == Rational(20));
  REQUIRE(lagq::falling_factorial(Rational(-11, 3), 0) == Rational(1));
  REQUIRE(lagq::falling_factorial(Rational(3, 2), 2) == Rational(3, 4));

  SECTION("rising(x, k) = (-1)^k falling(-x, k)") {
    std::mt19937 rng(5577);
    for (int trial = 0; trial < 40; ++trial) {
      Rational x = oracles::random_rational(rng);
      for (int k = 0; k <= 30; k += trial % 3 + 1) {
        Rational lhs = lagq::rising_factorial(x, k);
        Rational rhs = lagq::falling_factorial(-x, k);
        REQUIRE(lhs == (k % 2 == 0 ? rhs : -rhs));
      }
    }
  }
}

TEST_CASE("gamma ratios as finite products") {
  REQUIRE(lagq::gamma_ratio(Rational(0), 1, 3, 0) == Rational(6));
  REQUIRE(lagq::gamma_ratio(Rational(5, 3), 2, 4, 4) == Rational(1));
  REQUIRE(lagq::gamma_ratio(Rational(1, 2), 2, 2, 1) == Rational(63, 4));
  REQUIRE_THROWS_AS(lagq::gamma_ratio(Rational(0), 1, 1, 2), std::domain_error);
  REQUIRE_THROWS_AS(lagq::gamma_ratio(Rational(0), 1, 1, -1), std::domain_error);

  SECTION("telescoping over a midpoint") {
    std::mt19937 rng(91);
    std::uniform_int_distribution<int> pick(0, 20);
    for (int trial = 0; trial < 60; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      int lo = std::min({a, b, c}), hi = std::max({a, b, c});
      int mid = a + b + c - lo - hi;
      int alpha = trial % 3 + 1;
      Rational beta(trial - 10, 17);
      if (!(beta > Rational(-1))) beta = Rational(1, 2);
      REQUIRE(lagq::gamma_ratio(beta, alpha, hi, lo) ==
              lagq::gamma_ratio(beta, alpha, hi, mid) * lagq::gamma_ratio(beta, alpha, mid, lo));
    }
  }
}

TEST_CASE("generalized binomial coefficients") {
  REQUIRE(lagq::gen_binomial(Rational(5), 2) == Rational(10));
  REQUIRE(lagq::gen_binomial(Rational(-7, 5), 0) == Rational(1));
  REQUIRE(lagq::gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));

  SECTION("agrees with the Pascal triangle on integers") {
    std::vector<std::vector<BigInt>> pascal(21);
    for (int m = 0; m <= 20; ++m) {
      pascal[m].assign(static_cast<std::size_t>(m) + 1, 1);
      for (int k = 1; k < m; ++k) pascal[m][k] = pascal[m - 1][k - 1] + pascal[m - 1][k];
      for (int k = 0; k <= m; ++k) {
        REQUIRE(lagq::gen_binomial(Rational(m), k) == Rational(pascal[m][k]));
        REQUIRE(lagq::binomial_int(m, k) == pascal[m][k]);
      }
    }
  }
}

TEST_CASE("factorial") {
  REQUIRE(lagq::factorial(0) == 1);
  REQUIRE(lagq::factorial(1) == 1);
  REQUIRE(lagq::factorial(5) == 120);
  REQUIRE(lagq::factorial(20) == BigInt("2432902008176640000"));
  REQUIRE_THROWS_AS(lagq::factorial(-1), std::domain_error);
}
