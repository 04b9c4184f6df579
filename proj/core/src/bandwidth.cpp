#include "gkde/bandwidth.hpp"

#include "gkde/errors.hpp"
#include "gkde/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkde {

namespace {

constexpr double kSqrtPi = 1.7724538509055161;
constexpr double kSelectorExponent = 2.0 / 7.0;

double bandwidth_from_functionals(double numerator, double denominator, std::size_t n)
{
  return std::pow(numerator / denominator, kSelectorExponent) *
         std::pow(static_cast<double>(n), -kSelectorExponent);
}

} // namespace

MomentSummary moment_summary(const Sample& sample)
{
  const std::size_t n = sample.size();
  if (n < 2) {
    throw std::invalid_argument("moment_summary: need at least 2 observations");
  }
  // accumulate in sorted order so the result is independent of the
  // observation order, bit for bit
  std::vector<double> sorted(sample.values().begin(), sample.values().end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double v : sorted) {
    sum += v;
  }
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted) {
    const double d = v - mean;
    ss += d * d;
  }
  const double variance = ss / static_cast<double>(n);
  if (variance == 0.0) {
    throw std::invalid_argument(
      "moment_summary: degenerate sample (all observations equal, D_bar = 0)");
  }
  return {mean, variance, n};
}

GammaReference fit_gamma_reference(const MomentSummary& m)
{
  if (!(m.mean > 0.0) || !std::isfinite(m.mean)) {
    throw std::invalid_argument("fit_gamma_reference: mean must be > 0");
  }
  if (!(m.variance > 0.0) || !std::isfinite(m.variance)) {
    throw std::invalid_argument("fit_gamma_reference: variance must be > 0");
  }
  return {m.variance / m.mean, m.mean * m.mean / m.variance};
}

double numerator_functional(const GammaReference& ref)
{
  if (!(ref.rho_m > 1.5)) {
    throw IntegrabilityError(
      "I_n requires rho_m > 3/2 (x^(-3/2) f is not integrable at 0 for the "
      "fitted reference; rho_m = " +
      std::to_string(ref.rho_m) + ")");
  }
  return 3.0 / kSqrtPi *
         std::exp(log_gamma(ref.rho_m - 1.5) - log_gamma(ref.rho_m) -
                  1.5 * std::log(ref.b_m));
}

double denominator_functional(const GammaReference& ref, const QuadratureSpec& spec)
{
  if (!(ref.rho_m > 2.5)) {
    throw IntegrabilityError(
      "I_d requires rho_m > 5/2 ((f/(3x^2) + f'')^2 is not integrable at 0 "
      "for the fitted reference; rho_m = " +
      std::to_string(ref.rho_m) + ")");
  }
  const ParametricModel g = ParametricModel::gamma(ref.rho_m, ref.b_m);
  const auto integrand = [&g](double x) {
    const double v = g.pdf(x) / (3.0 * x * x) + g.pdf_d2(x);
    return v * v;
  };
  try {
    return integrate_semiaxis(integrand, spec);
  } catch (const QuadratureError& e) {
    throw IntegrabilityError(std::string("I_d quadrature failed: ") + e.what());
  }
}

double denominator_closed_form(const GammaReference& ref)
{
  if (!(ref.rho_m > 2.5)) {
    throw IntegrabilityError("closed form for I_d requires rho_m > 5/2");
  }
  const double rho = ref.rho_m;
  const double b = ref.b_m;
  const double numerator =
    std::pow(b, rho) * (4.0 * b * b - 12.0 * rho + 48.0) - 81.0 * rho +
    27.0 * rho * rho + 54.0;
  return std::exp(log_gamma(rho - 2.5) - log_gamma(rho)) * numerator /
         (72.0 * kSqrtPi * (rho - 1.0) * (rho - 2.0) * std::pow(b, 5.0));
}

BandwidthSelection rule_of_thumb_bandwidth(const Sample& sample,
                                           const QuadratureSpec& spec)
{
  const MomentSummary m = moment_summary(sample);
  const GammaReference ref = fit_gamma_reference(m);
  const double i_n = numerator_functional(ref);
  const double i_d = denominator_functional(ref, spec);

  SelectorDiagnostics diag;
  diag.numerator = i_n;
  diag.denominator = i_d;
  diag.mean = m.mean;
  diag.variance = m.variance;
  diag.rho_m = ref.rho_m;
  diag.b_m = ref.b_m;
  diag.closed_form_denominator = denominator_closed_form(ref);
  diag.closed_form_mismatch =
    std::abs(diag.closed_form_denominator / i_d - 1.0) > 0.01;
  diag.has_reference = true;

  return {bandwidth_from_functionals(i_n, i_d, m.n), SelectionMethod::rule_of_thumb,
          diag};
}

BandwidthSelection oracle_bandwidth(const ParametricModel& model,
                                    std::size_t n,
                                    const QuadratureSpec& spec)
{
  if (n < 1) {
    throw std::invalid_argument("oracle_bandwidth: n must be >= 1");
  }
  double numerator = 0.0;
  double denominator = 0.0;
  try {
    numerator =
      3.0 / kSqrtPi *
      integrate_semiaxis(
        [&model](double x) { return std::pow(x, -1.5) * model.pdf(x); }, spec);
    denominator = integrate_semiaxis(
      [&model](double x) {
        const double v = model.pdf(x) / (3.0 * x * x) + model.pdf_d2(x);
        return v * v;
      },
      spec);
  } catch (const QuadratureError& e) {
    throw IntegrabilityError("oracle_bandwidth: a theorem integral did not "
                             "converge for " +
                             model.describe() + ": " + e.what());
  }
  if (!std::isfinite(numerator) || !std::isfinite(denominator) ||
      !(denominator > 0.0)) {
    throw IntegrabilityError(
      "oracle_bandwidth: theorem integrals must be finite with a strictly "
      "positive denominator for " +
      model.describe());
  }

  SelectorDiagnostics diag;
  diag.numerator = numerator;
  diag.denominator = denominator;

  return {bandwidth_from_functionals(numerator, denominator, n),
          SelectionMethod::oracle, diag};
}

} // namespace gkde
