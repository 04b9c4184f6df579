#pragma once

#include <functional>

namespace gkde {

//! Tolerances and budget for the adaptive integrators.
struct QuadratureSpec
{
  double relative_tolerance = 1e-9;
  double absolute_tolerance = 1e-12;
  int max_subdivisions = 200;

  //! Throws std::invalid_argument if the tolerances or budget are unusable.
  void validate() const;
};

//! Adaptive Gauss-Kronrod (G7/K15) integration of f over the finite
//! interval [a, b]. Throws QuadratureError when the tolerance cannot be met
//! within spec.max_subdivisions or when f evaluates to a non-finite value.
double integrate_interval(const std::function<double(double)>& f,
                          double a,
                          double b,
                          const QuadratureSpec& spec = {});

//! Integral of f over (0, infinity).
//!
//! The range is split at `split` (default 1). On (0, split) the substitution
//! x = v^2 removes square-root-type endpoint behaviour at the origin; the
//! tail is mapped onto [0, 1) via t = split + u/(1-u). Each piece is
//! integrated adaptively with the same spec.
double integrate_semiaxis(const std::function<double(double)>& f,
                          const QuadratureSpec& spec = {},
                          double split = 1.0);

} // namespace gkde
