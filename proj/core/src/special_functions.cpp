#include "gkde/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gkde {

namespace {

void require_positive(double x, const char* who)
{
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error(std::string(who) + " requires a finite x > 0, got " +
                            std::to_string(x));
  }
}

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczos[9] = {
  0.99999999999980993,
  676.5203681218851,
  -1259.1392167224028,
  771.32342877765313,
  -176.61502916214059,
  12.507343278686905,
  -0.13857109526572012,
  9.9843695780195716e-6,
  1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178; // ln(2*pi)/2

double log_gamma_lanczos(double x)
{
  // valid for x >= 0.5
  double series = kLanczos[0];
  for (int k = 1; k < 9; ++k) {
    series += kLanczos[k] / (x - 1.0 + k);
  }
  const double t = x + 6.5;
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(series);
}

} // namespace

double log_gamma(double x)
{
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    // ln Gamma(x) = ln Gamma(x + 1) - ln x
    return log_gamma_lanczos(x + 1.0) - std::log(x);
  }
  return log_gamma_lanczos(x);
}

double digamma(double x)
{
  require_positive(x, "digamma");

  // recurrence shift into the asymptotic range; the reciprocals are summed
  // from smallest to largest so the one huge term (1/x for tiny x) is added
  // last and the result stays within ~1 ulp
  double shifts[6];
  int count = 0;
  while (x < 6.0) {
    shifts[count++] = 1.0 / x;
    x += 1.0;
  }

  // Psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k x^{2k}), terms through B_14
  const double inv = 1.0 / x;
  const double z = inv * inv;
  const double tail =
    z * (1.0 / 12.0 -
         z * (1.0 / 120.0 -
              z * (1.0 / 252.0 -
                   z * (1.0 / 240.0 -
                        z * (1.0 / 132.0 -
                             z * (691.0 / 32760.0 - z * (1.0 / 12.0)))))));
  double result = std::log(x) - 0.5 * inv - tail;
  for (int k = count - 1; k >= 0; --k) {
    result -= shifts[k];
  }
  return result;
}

} // namespace gkde
