#pragma once

namespace gkde {

//! Natural logarithm of the gamma function for x > 0.
//!
//! Lanczos approximation (g = 7, 9 coefficients), evaluated in log space so
//! that kernel shapes rho = x/b of order 1e4 and beyond stay representable.
//! Relative error is below 1e-13 away from the zeros of ln Gamma.
//! Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

//! Digamma function (logarithmic derivative of Gamma) for x > 0.
//!
//! Recurrence shift to x >= 6 followed by the asymptotic Bernoulli series;
//! absolute error below 1e-12 on [1e-6, 1e6].
//! Throws std::domain_error for x <= 0 or non-finite x.
double digamma(double x);

} // namespace gkde
