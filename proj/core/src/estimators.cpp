#include "gkde/estimators.hpp"

#include "gkde/kernels.hpp"

#include <stdexcept>
#include <string>

namespace gkde {

namespace {

double kernel_mean(const Sample& sample, double b, double x, CurveTarget target)
{
  const PointKernel k(x, b);
  const auto values = sample.values();
  const auto logs = sample.log_values();
  double acc = 0.0;
  if (target == CurveTarget::density) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      acc += k.density(values[i], logs[i]);
    }
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      acc += k.derivative(values[i], logs[i]);
    }
  }
  return acc / static_cast<double>(values.size());
}

void check_order(int order)
{
  if (order != 0 && order != 1) {
    throw std::invalid_argument("loo_estimate: order must be 0 or 1, got " +
                                std::to_string(order));
  }
}

} // namespace

double estimate_density(const Sample& sample, double b, double x)
{
  return kernel_mean(sample, b, x, CurveTarget::density);
}

double estimate_derivative(const Sample& sample, double b, double x)
{
  return kernel_mean(sample, b, x, CurveTarget::derivative);
}

CurveEstimate estimate_curve(const Sample& sample,
                             double b,
                             const EvaluationGrid& grid,
                             CurveTarget target)
{
  CurveEstimate out{grid, {}, target, b};
  out.values.reserve(static_cast<std::size_t>(grid.points()));
  for (int k = 0; k < grid.points(); ++k) {
    out.values.push_back(kernel_mean(sample, b, grid.at(k), target));
  }
  return out;
}

double loo_estimate(const Sample& sample, double b, std::size_t i, int order)
{
  check_order(order);
  const std::size_t n = sample.size();
  if (n < 2) {
    throw std::invalid_argument("loo_estimate: need at least 2 observations");
  }
  if (i >= n) {
    throw std::invalid_argument("loo_estimate: index out of range");
  }

  const PointKernel k(sample[i], b);
  const auto values = sample.values();
  const auto logs = sample.log_values();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) {
      continue;
    }
    acc += order == 0 ? k.density(values[j], logs[j])
                      : k.derivative(values[j], logs[j]);
  }
  return acc / static_cast<double>(n - 1);
}

double plugin_expectation(const Sample& sample,
                          double b,
                          int order,
                          const std::function<double(double, double)>& phi)
{
  check_order(order);
  const std::size_t n = sample.size();
  if (n < 2) {
    throw std::invalid_argument("plugin_expectation: need at least 2 observations");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += phi(sample[i], loo_estimate(sample, b, i, order));
  }
  return acc / static_cast<double>(n);
}

} // namespace gkde
