#pragma once

#include <stdexcept>

namespace gkde {

//! Adaptive quadrature could not reach the requested tolerance, or the
//! integrand produced a non-finite value.
class QuadratureError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

//! A bandwidth functional is not integrable for the given parameters
//! (e.g. the fitted gamma reference has rho_m <= 5/2), or a model fails
//! the finiteness conditions of the MISE theorem.
class IntegrabilityError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

} // namespace gkde
