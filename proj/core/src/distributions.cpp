#include "gkde/distributions.hpp"

#include "gkde/format.hpp"
#include "gkde/rng.hpp"
#include "gkde/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gkde {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrtPi = 1.7724538509055161;

void check_param(double v, const char* name)
{
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string("ParametricModel: parameter ") + name +
                                " must be finite and > 0, got " + std::to_string(v));
  }
}

void check_support(double x)
{
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("ParametricModel: x must be finite and > 0, got " +
                            std::to_string(x));
  }
}

double gamma_draw(rng::Rng& gen, double alpha)
{
  // Marsaglia-Tsang rejection; shape boost for alpha < 1.
  if (alpha < 1.0) {
    const double g = gamma_draw(gen, alpha + 1.0);
    return g * std::pow(gen.uniform01(), 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z;
    double v;
    do {
      z = gen.normal();
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = gen.uniform01();
    if (u < 1.0 - 0.0331 * z * z * z * z) {
      return d * v;
    }
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

} // namespace

ParametricModel::ParametricModel(Family family, double p1, double p2)
  : family_(family)
  , p1_(p1)
  , p2_(p2)
{
}

ParametricModel ParametricModel::maxwell(double sigma)
{
  check_param(sigma, "sigma");
  return {Family::maxwell, sigma, 0.0};
}

ParametricModel ParametricModel::weibull(double s)
{
  check_param(s, "s");
  return {Family::weibull, s, 0.0};
}

ParametricModel ParametricModel::gamma(double rho, double b)
{
  check_param(rho, "rho");
  check_param(b, "b");
  return {Family::gamma, rho, b};
}

double ParametricModel::pdf(double x) const
{
  check_support(x);
  switch (family_) {
  case Family::maxwell: {
    const double s = p1_;
    return kSqrt2 * x * x * std::exp(-x * x / (2.0 * s * s)) / (s * s * s * kSqrtPi);
  }
  case Family::weibull: {
    const double s = p1_;
    return s * std::pow(x, s - 1.0) * std::exp(-std::pow(x, s));
  }
  case Family::gamma:
  default: {
    const double rho = p1_;
    const double b = p2_;
    return std::exp((rho - 1.0) * std::log(x) - x / b - rho * std::log(b) -
                    log_gamma(rho));
  }
  }
}

double ParametricModel::pdf_d1(double x) const
{
  check_support(x);
  switch (family_) {
  case Family::maxwell: {
    const double s = p1_;
    const double s2 = s * s;
    return -kSqrt2 * x * std::exp(-x * x / (2.0 * s2)) * (x * x - 2.0 * s2) /
           (s2 * s2 * s * kSqrtPi);
  }
  case Family::weibull: {
    const double s = p1_;
    const double xs = std::pow(x, s);
    return -s * std::pow(x, s - 2.0) * std::exp(-xs) * (s * xs - s + 1.0);
  }
  case Family::gamma:
  default: {
    const double rho = p1_;
    const double b = p2_;
    return pdf(x) * ((rho - 1.0) / x - 1.0 / b);
  }
  }
}

double ParametricModel::pdf_d2(double x) const
{
  check_support(x);
  switch (family_) {
  case Family::maxwell: {
    // second derivative of the Maxwell density, assembled analytically
    const double s = p1_;
    const double s2 = s * s;
    const double r = x * x / s2;
    return kSqrt2 * std::exp(-x * x / (2.0 * s2)) * (2.0 - 5.0 * r + r * r) /
           (s * s2 * kSqrtPi);
  }
  case Family::weibull: {
    const double s = p1_;
    const double xs = std::pow(x, s);
    return s * std::exp(-xs) *
           (s * s * std::pow(x, 3.0 * s - 3.0) -
            3.0 * s * (s - 1.0) * std::pow(x, 2.0 * s - 3.0) +
            (s - 1.0) * (s - 2.0) * std::pow(x, s - 3.0));
  }
  case Family::gamma:
  default: {
    const double rho = p1_;
    const double b = p2_;
    const double g1 = (rho - 1.0) / x - 1.0 / b;
    return pdf(x) * (g1 * g1 - (rho - 1.0) / (x * x));
  }
  }
}

double ParametricModel::cdf(double x) const
{
  if (x <= 0.0) {
    return 0.0;
  }
  switch (family_) {
  case Family::maxwell: {
    const double s = p1_;
    const double z = x / s;
    return std::erf(z / kSqrt2) - (kSqrt2 / kSqrtPi) * z * std::exp(-z * z / 2.0);
  }
  case Family::weibull:
    return -std::expm1(-std::pow(x, p1_));
  case Family::gamma:
  default: {
    // integrate the density with the x = v^2 substitution (regularises the
    // origin for rho < 1)
    const double vmax = std::sqrt(x);
    return integrate_interval(
      [this](double v) { return 2.0 * v * pdf(v * v); }, 0.0, vmax,
      QuadratureSpec{1e-10, 1e-14, 200});
  }
  }
}

double ParametricModel::quantile(double p) const
{
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("quantile: p must lie in (0, 1)");
  }
  if (family_ == Family::weibull) {
    return std::pow(-std::log1p(-p), 1.0 / p1_);
  }

  // bracket then bisect on the CDF
  double lo = 0.0;
  double hi = family_ == Family::gamma ? p1_ * p2_ : 2.0 * p1_;
  while (cdf(hi) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) {
      throw std::runtime_error("quantile: failed to bracket");
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if ((hi - lo) <= 1e-12 * hi) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

Sample ParametricModel::sample(std::size_t count, std::uint64_t seed) const
{
  if (count < 1) {
    throw std::invalid_argument("sample: count must be >= 1");
  }
  rng::Rng gen(seed);
  std::vector<double> draws(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = 0.0;
    do {
      switch (family_) {
      case Family::maxwell: {
        const double z1 = gen.normal();
        const double z2 = gen.normal();
        const double z3 = gen.normal();
        x = p1_ * std::sqrt(z1 * z1 + z2 * z2 + z3 * z3);
        break;
      }
      case Family::weibull:
        x = std::pow(-std::log(gen.uniform01()), 1.0 / p1_);
        break;
      case Family::gamma:
      default:
        x = gamma_draw(gen, p1_) * p2_;
        break;
      }
    } while (x <= 0.0);
    draws[i] = x;
  }
  return Sample(std::move(draws));
}

std::string ParametricModel::describe() const
{
  switch (family_) {
  case Family::maxwell:
    return "maxwell(sigma=" + format::shortest(p1_) + ")";
  case Family::weibull:
    return "weibull(s=" + format::shortest(p1_) + ")";
  case Family::gamma:
  default:
    return "gamma(rho=" + format::shortest(p1_) + ",b=" + format::shortest(p2_) + ")";
  }
}

} // namespace gkde
