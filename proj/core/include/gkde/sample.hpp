#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gkde {

//! Immutable sample of strictly positive observations. Logarithms are
//! precomputed so every estimator evaluates identical floating-point sums.
class Sample
{
public:
  //! Validates: at least one value, all finite and > 0.
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::span<const double> log_values() const { return log_values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

private:
  std::vector<double> values_;
  std::vector<double> log_values_;
};

//! Equispaced abscissae x_min + k * step, k = 0 .. points-1.
class EvaluationGrid
{
public:
  EvaluationGrid(double x_min, double x_max, int points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int points() const { return points_; }
  double step() const { return step_; }
  double at(int k) const { return x_min_ + k * step_; }
  std::vector<double> abscissae() const;

private:
  double x_min_;
  double x_max_;
  int points_;
  double step_;
};

enum class CurveTarget
{
  density,
  derivative,
};

//! A curve estimate evaluated on a grid.
struct CurveEstimate
{
  EvaluationGrid grid;
  std::vector<double> values;
  CurveTarget target;
  double bandwidth;
};

} // namespace gkde
