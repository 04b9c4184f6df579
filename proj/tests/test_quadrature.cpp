#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkde/distributions.hpp"
#include "gkde/errors.hpp"
#include "gkde/quadrature.hpp"
#include "oracles.hpp"

#include <cmath>

using gkde::integrate_interval;
using gkde::integrate_semiaxis;
using gkde::QuadratureSpec;

TEST_CASE("unit exponential mass")
{
  const double v = integrate_semiaxis([](double t) { return std::exp(-t); });
  CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Gamma(2,1) mass: integral of t e^-t")
{
  const double v = integrate_semiaxis([](double t) { return t * std::exp(-t); });
  CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("x^-3/2 Maxwell integral against the fixed-grid Simpson oracle")
{
  const auto model = gkde::ParametricModel::maxwell(1.0);
  const auto integrand = [&model](double x) {
    return std::pow(x, -1.5) * model.pdf(x);
  };
  const double adaptive = integrate_semiaxis(integrand);
  const double simpson = oracles::simpson(integrand, 1e-8, 40.0, 1000001);
  CHECK(oracles::rel_err(adaptive, simpson) < 1e-7);
  // analytic value sqrt(2/pi) 2^-1/4 Gamma(3/4), frozen
  CHECK(adaptive == doctest::Approx(0.82217895866245855234).epsilon(1e-9));
}

TEST_CASE("finite interval: integral of sin on [0, pi]")
{
  const double v = integrate_interval([](double t) { return std::sin(t); }, 0.0,
                                      3.14159265358979323846);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sqrt singularity at the origin is handled by the transform")
{
  // integral of 1/sqrt(x) e^-x dx over (0, inf) = Gamma(1/2) = sqrt(pi)
  const double v =
    integrate_semiaxis([](double t) { return std::exp(-t) / std::sqrt(t); });
  CHECK(v == doctest::Approx(1.7724538509055161).epsilon(1e-9));
}

TEST_CASE("gamma density mass is 1 on the (rho, b) lattice")
{
  for (double rho : {1.0, 1.5, 2.0, 5.0, 10.0}) {
    for (double b : {0.1, 1.0, 3.0}) {
      const auto g = gkde::ParametricModel::gamma(rho, b);
      const double mass = integrate_semiaxis([&g](double t) { return g.pdf(t); });
      CHECK(std::abs(mass - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("divergent integrand raises after the subdivision budget")
{
  CHECK_THROWS_AS(integrate_interval([](double t) { return 1.0 / t; }, 0.0, 1.0),
                  gkde::QuadratureError);
}

TEST_CASE("non-finite integrand evaluations propagate")
{
  CHECK_THROWS_AS(
    integrate_interval([](double) { return std::nan(""); }, 0.0, 1.0),
    gkde::QuadratureError);
}

TEST_CASE("subdivision budget is respected")
{
  QuadratureSpec tight;
  tight.relative_tolerance = 1e-14;
  tight.absolute_tolerance = 0.0;
  tight.max_subdivisions = 1;
  CHECK_THROWS_AS(
    integrate_interval([](double t) { return std::exp(-t * t) * std::sin(40.0 * t); },
                       0.0, 10.0, tight),
    gkde::QuadratureError);
}

TEST_CASE("spec validation")
{
  QuadratureSpec bad;
  bad.relative_tolerance = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = QuadratureSpec{};
  bad.absolute_tolerance = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = QuadratureSpec{};
  bad.max_subdivisions = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("degenerate and reversed intervals")
{
  CHECK(integrate_interval([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}
