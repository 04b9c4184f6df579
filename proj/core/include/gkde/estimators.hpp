#pragma once

#include "gkde/sample.hpp"

#include <cstddef>
#include <functional>

namespace gkde {

//! Gamma kernel density estimate at a single point:
//! (1/n) sum_i K_{rho_b(x),b}(X_i).
double estimate_density(const Sample& sample, double b, double x);

//! Density derivative estimate at a single point:
//! (1/n) sum_i K'_{rho_b(x),b}(X_i). Exactly 0 at x = 0.
double estimate_derivative(const Sample& sample, double b, double x);

//! Pointwise estimator applied across a grid.
CurveEstimate estimate_curve(const Sample& sample,
                             double b,
                             const EvaluationGrid& grid,
                             CurveTarget target);

//! Leave-one-out estimate centred at X_i, i.e. the mean over the other n-1
//! observations of the kernel (order 0) or derivative kernel (order 1).
//! `i` is a zero-based index; requires n >= 2.
double loo_estimate(const Sample& sample, double b, std::size_t i, int order);

//! Plug-in approximation of E phi(X, f^(order)(X)) by the arithmetic mean of
//! phi(X_i, leave-one-out estimate at X_i).
double plugin_expectation(const Sample& sample,
                          double b,
                          int order,
                          const std::function<double(double, double)>& phi);

} // namespace gkde
