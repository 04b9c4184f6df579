#include "gkde/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gkde {

Sample::Sample(std::vector<double> values)
  : values_(std::move(values))
{
  if (values_.empty()) {
    throw std::invalid_argument("Sample: no observations");
  }
  log_values_.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument("Sample: observation " + std::to_string(i + 1) +
                                  " is not a finite positive value (" +
                                  std::to_string(v) + ")");
    }
    log_values_.push_back(std::log(v));
  }
}

EvaluationGrid::EvaluationGrid(double x_min, double x_max, int points)
  : x_min_(x_min)
  , x_max_(x_max)
  , points_(points)
{
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(0.0 < x_min) ||
      !(x_min < x_max)) {
    throw std::invalid_argument("EvaluationGrid: need 0 < x_min < x_max");
  }
  if (points < 2) {
    throw std::invalid_argument("EvaluationGrid: need at least 2 points");
  }
  step_ = (x_max_ - x_min_) / (points_ - 1);
}

std::vector<double> EvaluationGrid::abscissae() const
{
  std::vector<double> xs(static_cast<std::size_t>(points_));
  for (int k = 0; k < points_; ++k) {
    xs[static_cast<std::size_t>(k)] = at(k);
  }
  return xs;
}

} // namespace gkde
