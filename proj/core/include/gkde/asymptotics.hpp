#pragma once

#include "gkde/distributions.hpp"
#include "gkde/quadrature.hpp"

#include <cstddef>

namespace gkde {

//! Leading bias term of the derivative estimate in the interior regime
//! (x/b -> infinity):  b (f(x)/(12 x^2) + f''(x)/4).
double interior_bias(const ParametricModel& model, double x, double b);

//! Leading bias term in the boundary regime (x/b -> kappa):
//!   f'(x) (3k^2 - 6k - 1)/(6k) + b f''(x) (7k/48 + k^2/2),  k = x/b.
double boundary_bias(const ParametricModel& model, double x, double b);

struct PointwiseVariance
{
  double value;
  //! The expansion can go negative at moderate b; such evaluations are
  //! clamped to 0 and flagged.
  bool clamped;
};

//! Leading variance term of the derivative estimate:
//!   (n^-1 b^-3/2 x^-1/2 / (2 sqrt(pi))) (f/(2x) + b (f/(4x^2) - f'/(4x))).
PointwiseVariance pointwise_variance(const ParametricModel& model,
                                     double x,
                                     double b,
                                     std::size_t n);

//! Bias and variance expansions combined at one point; the bias regime is
//! chosen by the shape rule (interior iff x >= 2b).
struct AsymptoticPointReport
{
  double x;
  double b;
  std::size_t n;
  double bias;
  double variance;
  bool variance_clamped;
};

AsymptoticPointReport asymptotic_point(const ParametricModel& model,
                                       double x,
                                       double b,
                                       std::size_t n);

struct MiseReport
{
  double b;
  std::size_t n;
  double integrated_sq_bias;
  double integrated_variance;
  double mise; //!< sum of the two terms
};

//! MISE expansion of the derivative estimate:
//!   (b^2/16) integral (f/(3x^2) + f'')^2 dx
//!   + integral n^-1 b^-3/2 x^-3/2 / (4 sqrt(pi)) (f + (b/2)(f/x - f')) dx.
//! `with_variance_correction = false` drops the O(b) part of the variance
//! integrand, leaving exactly the objective whose closed-form minimiser is
//! the oracle bandwidth.
//! Throws IntegrabilityError when an integral fails to converge.
MiseReport mise(const ParametricModel& model,
                double b,
                std::size_t n,
                bool with_variance_correction = true,
                const QuadratureSpec& spec = {});

} // namespace gkde
