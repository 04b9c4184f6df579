#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkde/special_functions.hpp"

#include <cmath>

using gkde::digamma;
using gkde::log_gamma;

TEST_CASE("log_gamma anchor values")
{
  CHECK(std::abs(log_gamma(1.0)) < 1e-13);
  CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-13));
  CHECK(log_gamma(5.0) == doctest::Approx(3.1780538303479456196).epsilon(1e-13));
  CHECK(std::abs(log_gamma(2.0)) < 1e-13);
}

TEST_CASE("log_gamma recurrence |lgamma(x+1) - lgamma(x) - ln x| <= 1e-11")
{
  for (double x : {0.1, 0.5, 1.0, 2.5, 10.0, 100.0}) {
    const double lhs = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
    CHECK(std::abs(lhs) <= 1e-11);
  }
}

TEST_CASE("log_gamma over a wide range against Stirling at huge arguments")
{
  // relative accuracy across the contract range [1e-6, 1e6]
  // small x: ln Gamma(x) ~ -ln x - euler*x + pi^2/12 x^2 ...
  const double euler = 0.57721566490153286061;
  const double x = 1e-6;
  const double expected = -std::log(x) - euler * x + 0.82246703342411321824 * x * x;
  CHECK(log_gamma(x) == doctest::Approx(expected).epsilon(1e-12));

  // large x: Stirling with two correction terms
  const double y = 1e6;
  const double stirling = (y - 0.5) * std::log(y) - y +
                          0.91893853320467274178 + 1.0 / (12.0 * y) -
                          1.0 / (360.0 * y * y * y);
  CHECK(log_gamma(y) == doctest::Approx(stirling).epsilon(1e-12));
}

TEST_CASE("log_gamma domain errors")
{
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("digamma anchor values")
{
  CHECK(digamma(1.0) == doctest::Approx(-0.57721566490153286061).epsilon(1e-12));
  CHECK(digamma(2.0) == doctest::Approx(0.42278433509846713939).epsilon(1e-12));
  CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214234794).epsilon(1e-12));
}

TEST_CASE("digamma recurrence |psi(x+1) - psi(x) - 1/x| <= 1e-10")
{
  for (double x : {0.1, 0.5, 1.0, 2.5, 10.0, 100.0}) {
    const double lhs = digamma(x + 1.0) - digamma(x) - 1.0 / x;
    CHECK(std::abs(lhs) <= 1e-10);
  }
}

TEST_CASE("digamma asymptotic agreement at large x")
{
  // psi(x) ~ ln x - 1/(2x) - 1/(12x^2), next term ~ 1e-22 at x = 1e5
  const double x = 1e5;
  const double expected = std::log(x) - 0.5 / x - 1.0 / (12.0 * x * x);
  CHECK(digamma(x) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("digamma domain errors")
{
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
  CHECK_THROWS_AS(digamma(std::nan("")), std::domain_error);
}
