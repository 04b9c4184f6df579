#pragma once

namespace gkde {

//! Shape/scale pair of a gamma density used as a kernel.
struct GammaShape
{
  double rho; //!< shape, > 0
  double b;   //!< scale = bandwidth, > 0, in data units
};

//! Which branch of the piecewise shape rule applies at an evaluation point.
enum class KernelRegion
{
  interior, //!< x >= 2b, rho_1 = x/b
  boundary, //!< 0 <= x < 2b, rho_2 = (x/2b)^2 + 1
};

struct LocalShape
{
  GammaShape shape;
  KernelRegion region;
};

//! Piecewise shape rule rho_b(x): x/b in the interior, (x/2b)^2 + 1 near
//! zero. The seam x = 2b belongs to the interior branch; both branches give
//! rho = 2 there.
LocalShape shape_at(double x, double b);

//! Gamma kernel K_{rho_b(x),b}(t): the gamma density with shape rho_b(x) and
//! scale b evaluated at t > 0. Computed in log space; exponent underflow
//! yields 0 rather than an error.
double kernel(double x, double b, double t);

//! Derivative kernel d/dx K_{rho_b(x),b}(t):
//!   interior:  (1/b)      * K * (ln t - ln b - Psi(rho_1)),
//!   boundary:  (x/(2b^2)) * K * (ln t - ln b - Psi(rho_2)).
//! At x = 0 the boundary prefactor makes the value exactly 0.
double kernel_derivative(double x, double b, double t);

//! Everything about the kernel at a fixed evaluation point x that does not
//! depend on t, precomputed once. The pointwise and whole-curve estimators
//! share this type so that both produce bit-identical sums.
class PointKernel
{
public:
  PointKernel(double x, double b);

  //! K(t) given t and ln t (the caller controls how ln t is obtained).
  double density(double t, double log_t) const;

  //! d/dx K(t) given t and ln t.
  double derivative(double t, double log_t) const;

  const LocalShape& local_shape() const { return shape_; }

private:
  LocalShape shape_;
  double inv_b_;
  double log_b_;
  double log_norm_; //!< rho * ln b + ln Gamma(rho)
  double psi_;      //!< Psi(rho)
  double prefactor_;
};

} // namespace gkde
