#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkde/asymptotics.hpp"
#include "gkde/bandwidth.hpp"
#include "gkde/distributions.hpp"
#include "gkde/errors.hpp"
#include "oracles.hpp"

#include <cmath>

using gkde::boundary_bias;
using gkde::interior_bias;
using gkde::mise;
using gkde::ParametricModel;
using gkde::pointwise_variance;

namespace {

constexpr double kSqrtPi = 1.7724538509055161;

// Maxwell(1) closed forms written out independently of the library.
double maxwell_pdf(double x)
{
  return std::sqrt(2.0) * x * x * std::exp(-x * x / 2.0) / kSqrtPi;
}
double maxwell_d1(double x)
{
  return -std::sqrt(2.0) * x * std::exp(-x * x / 2.0) * (x * x - 2.0) / kSqrtPi;
}
double maxwell_d2(double x)
{
  return std::sqrt(2.0) * std::exp(-x * x / 2.0) *
         (2.0 - 5.0 * x * x + x * x * x * x) / kSqrtPi;
}

} // namespace

TEST_CASE("interior bias: closed-form substitution and b-linearity")
{
  const auto m = ParametricModel::maxwell(1.0);
  const double expected = 0.1 * (maxwell_pdf(1.0) / 12.0 + maxwell_d2(1.0) / 4.0);
  CHECK(interior_bias(m, 1.0, 0.1) == doctest::Approx(expected).epsilon(1e-13));

  // linear in b, exactly
  CHECK(interior_bias(m, 1.3, 0.2) == 2.0 * interior_bias(m, 1.3, 0.1));

  // a point where the density has already underflowed to zero
  const auto w = ParametricModel::weibull(3.0);
  CHECK(interior_bias(w, 30.0, 0.1) == 0.0);
}

TEST_CASE("boundary bias at kappa = 2 carries the -1/12 leading coefficient")
{
  // exact rational arithmetic of the displayed coefficient
  const double kappa = 2.0;
  CHECK((3.0 * kappa * kappa - 6.0 * kappa - 1.0) / (6.0 * kappa) == -1.0 / 12.0);

  const auto m = ParametricModel::maxwell(1.0);
  const double x = 0.2;
  const double b = 0.1; // kappa = 2
  const double second_order = b * maxwell_d2(x) * (7.0 * 2.0 / 48.0 + 2.0);
  const double extracted = (boundary_bias(m, x, b) - second_order) / maxwell_d1(x);
  CHECK(extracted == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("boundary bias leading term vanishes at the quadratic root")
{
  const double kappa = 1.0 + 2.0 / std::sqrt(3.0);
  const auto m = ParametricModel::maxwell(1.0);
  const double b = 0.1;
  const double x = kappa * b;
  const double expected = b * maxwell_d2(x) * (7.0 * kappa / 48.0 + kappa * kappa / 2.0);
  CHECK(boundary_bias(m, x, b) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("boundary bias closed-form substitution for Weibull")
{
  const auto w = ParametricModel::weibull(3.0);
  const double x = 0.1;
  const double b = 0.05;
  const double k = 2.0; // x/b
  const double d1 = -3.0 * std::pow(x, 1.0) * std::exp(-x * x * x) *
                    (3.0 * x * x * x - 2.0);
  const double d2 = 3.0 * std::exp(-x * x * x) *
                    (9.0 * std::pow(x, 6.0) - 18.0 * std::pow(x, 3.0) + 2.0);
  const double expected = d1 * (3.0 * k * k - 6.0 * k - 1.0) / (6.0 * k) +
                          b * d2 * (7.0 * k / 48.0 + k * k / 2.0);
  CHECK(boundary_bias(w, x, b) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("pointwise variance scalings and closed form")
{
  const auto m = ParametricModel::maxwell(1.0);

  // 1/n factor
  const double v1 = pointwise_variance(m, 1.0, 0.1, 1000).value;
  const double v2 = pointwise_variance(m, 1.0, 0.1, 2000).value;
  CHECK(v1 == doctest::Approx(2.0 * v2).epsilon(1e-15));

  // b^-3/2 leading factor, tested where the O(b) correction vanishes:
  // Gamma(3, 1) at x = 1 has f/x == f'
  const auto g = ParametricModel::gamma(3.0, 1.0);
  const double lead1 = pointwise_variance(g, 1.0, 0.02, 500).value;
  const double lead8 = pointwise_variance(g, 1.0, 0.16, 500).value;
  CHECK(oracles::rel_err(lead1 / lead8, std::pow(8.0, 1.5)) < 1e-12);

  // closed-form substitution
  const double x = 1.0;
  const double b = 0.1;
  const double expected = std::pow(b, -1.5) / (std::sqrt(x) * 2.0 * kSqrtPi * 1000.0) *
                          (maxwell_pdf(x) / (2.0 * x) +
                           b * (maxwell_pdf(x) / (4.0 * x * x) -
                                maxwell_d1(x) / (4.0 * x)));
  CHECK(pointwise_variance(m, x, b, 1000).value ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("negative variance evaluations are clamped and flagged")
{
  // Gamma(100, 1) at x = 1: the O(b) correction dominates and goes negative
  const auto g = ParametricModel::gamma(100.0, 1.0);
  const auto v = pointwise_variance(g, 1.0, 1.0, 100);
  CHECK(v.value == 0.0);
  CHECK(v.clamped);

  const auto ok = pointwise_variance(ParametricModel::maxwell(1.0), 1.5, 0.15, 100);
  CHECK_FALSE(ok.clamped);
  CHECK(ok.value > 0.0);
}

TEST_CASE("asymptotic point report picks the regime by the shape rule")
{
  const auto m = ParametricModel::maxwell(1.0);
  const auto interior = gkde::asymptotic_point(m, 1.0, 0.1, 100);
  CHECK(interior.bias == interior_bias(m, 1.0, 0.1));
  const auto boundary = gkde::asymptotic_point(m, 0.15, 0.1, 100);
  CHECK(boundary.bias == boundary_bias(m, 0.15, 0.1));
  CHECK(boundary.variance >= 0.0);
}

TEST_CASE("MISE report structure and scalings")
{
  const auto m = ParametricModel::maxwell(1.0);
  const auto r1 = mise(m, 0.05, 1000);
  const auto r2 = mise(m, 0.10, 1000);
  CHECK(r1.mise == r1.integrated_sq_bias + r1.integrated_variance);
  CHECK(r1.integrated_sq_bias >= 0.0);
  CHECK(r1.integrated_variance >= 0.0);
  // squared-bias term is quadratic in b
  CHECK(oracles::rel_err(r2.integrated_sq_bias, 4.0 * r1.integrated_sq_bias) <
        1e-12);
}

TEST_CASE("the MISE minimiser reproduces the oracle bandwidth")
{
  const auto m = ParametricModel::maxwell(1.0);
  const std::size_t n = 1000;
  const double b_oracle = gkde::oracle_bandwidth(m, n).b;

  // leading terms only: the same optimisation Eq-form solves analytically
  const double argmin_leading = oracles::argmin_log_grid(
    [&](double b) { return mise(m, b, n, false).mise; }, 0.01, 1.0);
  CHECK(oracles::rel_err(argmin_leading, b_oracle) < 0.005);

  // full expansion with the O(b) variance correction stays within 2%
  const double argmin_full = oracles::argmin_log_grid(
    [&](double b) { return mise(m, b, n, true).mise; }, 0.01, 1.0);
  CHECK(oracles::rel_err(argmin_full, b_oracle) < 0.02);
}

TEST_CASE("MISE integrability failure for inadmissible models")
{
  CHECK_THROWS_AS(mise(ParametricModel::weibull(2.0), 0.1, 1000),
                  gkde::IntegrabilityError);
}

TEST_CASE("domain errors")
{
  const auto m = ParametricModel::maxwell(1.0);
  CHECK_THROWS_AS(interior_bias(m, 0.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(boundary_bias(m, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(pointwise_variance(m, -1.0, 0.1, 10), std::domain_error);
  CHECK_THROWS_AS(mise(m, -0.1, 10), std::domain_error);
}
