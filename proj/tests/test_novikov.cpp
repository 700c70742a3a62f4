#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpsurf/novikov.hpp"

using namespace qpsurf;

namespace {

NovikovScalar random_scalar(std::mt19937_64& rng, int max_terms = 3) {
  NovikovScalar x;
  const int terms = static_cast<int>(rng() % max_terms) + 1;
  for (int i = 0; i < terms; ++i) {
    Rational c(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    c.canonicalize();
    const Rational e(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 2) + 1);
    x += NovikovScalar::monomial(c, e);
  }
  return x;
}

}  // namespace

TEST_CASE("construction and accessors") {
  const NovikovScalar zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.valuation().has_value());
  CHECK(zero.leading_coefficient() == 0);
  CHECK(NovikovScalar(1).is_one());
  CHECK(NovikovScalar::monomial(0, 3).is_zero());

  const NovikovScalar x = NovikovScalar::monomial(Rational(3, 2), 2) + NovikovScalar::monomial(-5, Rational(1, 2));
  CHECK(*x.valuation() == Rational(1, 2));
  CHECK(x.leading_coefficient() == -5);
  CHECK(x.coefficient(2) == Rational(3, 2));
  CHECK(x.coefficient(7) == 0);
  CHECK(x.truncated(1) == NovikovScalar::monomial(-5, Rational(1, 2)));
}

TEST_CASE("cancellation leaves no zero terms") {
  const NovikovScalar a = NovikovScalar::q_power(2) + NovikovScalar(1);
  const NovikovScalar b = a - NovikovScalar::q_power(2);
  CHECK(b == NovikovScalar(1));
  CHECK(b.terms().size() == 1);
  CHECK((a - a).is_zero());
}

TEST_CASE("(1 + q)(1 - q) = 1 - q^2") {
  const NovikovScalar q = NovikovScalar::q_power(1);
  CHECK((NovikovScalar(1) + q) * (NovikovScalar(1) - q) == NovikovScalar(1) - q * q);
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const NovikovScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(-(-a) == a);
    if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).valuation() == *a.valuation() + *b.valuation());
  }
}

TEST_CASE("text form round trips") {
  CHECK(NovikovScalar::parse("1 - q^2") == NovikovScalar(1) - NovikovScalar::q_power(2));
  CHECK(NovikovScalar::parse("5*q^1/2") == NovikovScalar::monomial(5, Rational(1, 2)));
  CHECK(NovikovScalar::parse("-3/4*q^-1") == NovikovScalar::monomial(Rational(-3, 4), -1));
  CHECK(NovikovScalar::parse("q") == NovikovScalar::q_power(1));
  CHECK(NovikovScalar::parse("0").is_zero());
  CHECK_THROWS(NovikovScalar::parse(""));
  CHECK_THROWS(NovikovScalar::parse("1 +"));
  CHECK_THROWS(NovikovScalar::parse("q^"));
  CHECK_THROWS(NovikovScalar::parse("1/0"));
  CHECK_THROWS(NovikovScalar::parse("x"));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const NovikovScalar a = random_scalar(rng);
    CHECK(NovikovScalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("powers and inverses") {
  const NovikovScalar m = NovikovScalar::monomial(Rational(2, 3), Rational(5, 2));
  CHECK(m.pow(0) == NovikovScalar(1));
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.pow(-2) * m.pow(2) == NovikovScalar(1));
  CHECK(inverse_monomial(m) * m == NovikovScalar(1));
  CHECK_THROWS_AS(inverse_monomial(NovikovScalar(1) + NovikovScalar::q_power(1)), std::domain_error);
  CHECK_THROWS_AS(inverse_mod(NovikovScalar(), 4), std::domain_error);
  CHECK_THROWS((NovikovScalar(1) + NovikovScalar::q_power(1)).pow(-1));

  // 1/(1 - q) = 1 + q + q^2 + ...
  const NovikovScalar inv = inverse_mod(NovikovScalar(1) - NovikovScalar::q_power(1), 5);
  for (int e = 0; e <= 5; ++e) CHECK(inv.coefficient(e) == 1);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const NovikovScalar a = random_scalar(rng);
    if (a.is_zero()) continue;
    const Rational truncation = 6;
    const NovikovScalar err = a * inverse_mod(a, truncation) - NovikovScalar(1);
    if (!err.is_zero()) CHECK(*err.valuation() > truncation);
  }
}

TEST_CASE("display order is total and deterministic") {
  const NovikovScalar a = NovikovScalar::q_power(1), b = NovikovScalar::q_power(2);
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK_FALSE(a < a);
}
