#include "gkde/kernels.hpp"

#include "gkde/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gkde {

namespace {

void check_point(double x, double b)
{
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("kernel: evaluation point x must be finite and >= 0, got " +
                            std::to_string(x));
  }
  if (!std::isfinite(b) || b <= 0.0) {
    throw std::domain_error("kernel: bandwidth b must be finite and > 0, got " +
                            std::to_string(b));
  }
}

void check_argument(double t)
{
  if (!std::isfinite(t) || t <= 0.0) {
    throw std::domain_error("kernel: data argument t must be finite and > 0, got " +
                            std::to_string(t));
  }
}

} // namespace

LocalShape shape_at(double x, double b)
{
  check_point(x, b);
  if (x >= 2.0 * b) {
    return {{x / b, b}, KernelRegion::interior};
  }
  const double half = x / (2.0 * b);
  return {{half * half + 1.0, b}, KernelRegion::boundary};
}

PointKernel::PointKernel(double x, double b)
  : shape_(shape_at(x, b))
  , inv_b_(1.0 / b)
  , log_b_(std::log(b))
  , log_norm_(shape_.shape.rho * log_b_ + log_gamma(shape_.shape.rho))
  , psi_(digamma(shape_.shape.rho))
  , prefactor_(shape_.region == KernelRegion::interior ? inv_b_
                                                       : x / (2.0 * b * b))
{
}

double PointKernel::density(double t, double log_t) const
{
  return std::exp((shape_.shape.rho - 1.0) * log_t - t * inv_b_ - log_norm_);
}

double PointKernel::derivative(double t, double log_t) const
{
  return prefactor_ * density(t, log_t) * (log_t - log_b_ - psi_);
}

double kernel(double x, double b, double t)
{
  check_argument(t);
  const PointKernel k(x, b);
  return k.density(t, std::log(t));
}

double kernel_derivative(double x, double b, double t)
{
  check_argument(t);
  const PointKernel k(x, b);
  return k.derivative(t, std::log(t));
}

} // namespace gkde
