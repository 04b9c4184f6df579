#include "gkde/asymptotics.hpp"

#include "gkde/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gkde {

namespace {

constexpr double kSqrtPi = 1.7724538509055161;

void check_xb(double x, double b)
{
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("asymptotics: x must be finite and > 0");
  }
  if (!std::isfinite(b) || b <= 0.0) {
    throw std::domain_error("asymptotics: b must be finite and > 0");
  }
}

} // namespace

double interior_bias(const ParametricModel& model, double x, double b)
{
  check_xb(x, b);
  return b * (model.pdf(x) / (12.0 * x * x) + model.pdf_d2(x) / 4.0);
}

double boundary_bias(const ParametricModel& model, double x, double b)
{
  check_xb(x, b);
  const double k = x / b;
  return model.pdf_d1(x) * (3.0 * k * k - 6.0 * k - 1.0) / (6.0 * k) +
         b * model.pdf_d2(x) * (7.0 * k / 48.0 + k * k / 2.0);
}

PointwiseVariance pointwise_variance(const ParametricModel& model,
                                     double x,
                                     double b,
                                     std::size_t n)
{
  check_xb(x, b);
  if (n < 1) {
    throw std::domain_error("pointwise_variance: n must be >= 1");
  }
  const double f = model.pdf(x);
  const double f1 = model.pdf_d1(x);
  const double lead = std::pow(b, -1.5) / (std::sqrt(x) * 2.0 * kSqrtPi *
                                           static_cast<double>(n));
  const double value =
    lead * (f / (2.0 * x) + b * (f / (4.0 * x * x) - f1 / (4.0 * x)));
  if (value < 0.0) {
    return {0.0, true};
  }
  return {value, false};
}

AsymptoticPointReport asymptotic_point(const ParametricModel& model,
                                       double x,
                                       double b,
                                       std::size_t n)
{
  const double bias =
    x >= 2.0 * b ? interior_bias(model, x, b) : boundary_bias(model, x, b);
  const PointwiseVariance var = pointwise_variance(model, x, b, n);
  return {x, b, n, bias, var.value, var.clamped};
}

MiseReport mise(const ParametricModel& model,
                double b,
                std::size_t n,
                bool with_variance_correction,
                const QuadratureSpec& spec)
{
  if (!std::isfinite(b) || b <= 0.0) {
    throw std::domain_error("mise: b must be finite and > 0");
  }
  if (n < 1) {
    throw std::domain_error("mise: n must be >= 1");
  }

  try {
    const double bias_integral = integrate_semiaxis(
      [&model](double x) {
        const double v = model.pdf(x) / (3.0 * x * x) + model.pdf_d2(x);
        return v * v;
      },
      spec);

    const double inv_n = 1.0 / static_cast<double>(n);
    const double b_pow = std::pow(b, -1.5);
    const double variance_integral = integrate_semiaxis(
      [&model, b, with_variance_correction](double x) {
        const double f = model.pdf(x);
        double inner = f;
        if (with_variance_correction) {
          inner += 0.5 * b * (f / x - model.pdf_d1(x));
        }
        return std::pow(x, -1.5) * inner;
      },
      spec);

    MiseReport report;
    report.b = b;
    report.n = n;
    report.integrated_sq_bias = b * b / 16.0 * bias_integral;
    report.integrated_variance =
      inv_n * b_pow / (4.0 * kSqrtPi) * variance_integral;
    report.mise = report.integrated_sq_bias + report.integrated_variance;
    return report;
  } catch (const QuadratureError& e) {
    throw IntegrabilityError("mise: integral did not converge for " +
                             model.describe() + ": " + e.what());
  }
}

} // namespace gkde
