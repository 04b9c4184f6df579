#pragma once

#include "gkde/quadrature.hpp"
#include "gkde/sample.hpp"

#include <cstdint>
#include <string>

namespace gkde {

//! A known parametric law on the positive semi-axis: closed-form density,
//! its first two derivatives, a numeric quantile, and a reproducible
//! sampler. Used both as the "truth" in simulations and as the reference
//! family in bandwidth selection.
class ParametricModel
{
public:
  //! Maxwell: f(x) = sqrt(2) x^2 exp(-x^2 / (2 sigma^2)) / (sigma^3 sqrt(pi)).
  static ParametricModel maxwell(double sigma);

  //! Weibull: f(x) = s x^(s-1) exp(-x^s).
  static ParametricModel weibull(double s);

  //! Gamma: f(x) = x^(rho-1) exp(-x/b) / (b^rho Gamma(rho)).
  static ParametricModel gamma(double rho, double b);

  double pdf(double x) const;
  double pdf_d1(double x) const;
  double pdf_d2(double x) const;

  //! p-quantile, p in (0, 1). Closed-form CDF inversion for Maxwell and
  //! Weibull; quadrature CDF plus bisection for Gamma. Drives the automatic
  //! study grid (0.999 quantile).
  double quantile(double p) const;

  //! `count` reproducible pseudo-random draws. The same (seed, count, model)
  //! always produces the identical sample. Maxwell draws are
  //! sigma*sqrt(Z1^2+Z2^2+Z3^2), Weibull draws (-ln U)^(1/s), Gamma draws
  //! use the Marsaglia-Tsang rejection scheme.
  Sample sample(std::size_t count, std::uint64_t seed) const;

  //! e.g. "maxwell(sigma=1)" -- for config echoes and reports.
  std::string describe() const;

private:
  enum class Family
  {
    maxwell,
    weibull,
    gamma,
  };

  ParametricModel(Family family, double p1, double p2);

  double cdf(double x) const;

  Family family_;
  double p1_;
  double p2_;
};

} // namespace gkde
