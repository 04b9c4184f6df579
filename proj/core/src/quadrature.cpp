#include "gkde/quadrature.hpp"

#include "gkde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkde {

namespace {

// 15-point Kronrod abscissae (positive half) and weights; the embedded
// 7-point Gauss rule lives on the odd-indexed nodes and the centre.
constexpr double kNodes[8] = {
  0.991455371120812639206854697526329,
  0.949107912342758524526189684047851,
  0.864864423359769072789712788640926,
  0.741531185599394439863864773280788,
  0.586087235467691130294144838258730,
  0.405845151377397166906606412076961,
  0.207784955007898467600689403773245,
  0.0,
};

constexpr double kKronrodW[8] = {
  0.022935322010529224963732008058970,
  0.063092092629978553290700663189204,
  0.104790010322250183839876322541518,
  0.140653259715525918745189590510238,
  0.169004726639267902826583426598550,
  0.190350578064785409913256402421014,
  0.204432940075298892414161999234649,
  0.209482141084727828012999174891714,
};

constexpr double kGaussW[4] = {
  0.129484966168869693270611432679082,
  0.279705391489276667901467771423780,
  0.381830050505118944950369775488975,
  0.417959183673469387755102040816327,
};

struct Interval
{
  double a;
  double b;
  double value;
  double error;
};

struct ByError
{
  bool operator()(const Interval& lhs, const Interval& rhs) const
  {
    return lhs.error < rhs.error;
  }
};

Interval gk15(const std::function<double(double)>& f, double a, double b)
{
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = f(mid);
    } else {
      fsum = f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]);
    }
    if (!std::isfinite(fsum)) {
      throw QuadratureError("non-finite integrand value inside [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    kronrod += kKronrodW[i] * fsum;
    if (i % 2 == 1) {
      // odd-indexed nodes (and the centre, i == 7) carry the embedded G7 rule
      gauss += kGaussW[i / 2] * fsum;
    }
  }
  return {a, b, kronrod * half, std::abs(kronrod - gauss) * std::abs(half)};
}

} // namespace

void QuadratureSpec::validate() const
{
  if (!(relative_tolerance > 0.0) || !std::isfinite(relative_tolerance)) {
    throw std::invalid_argument("QuadratureSpec: relative_tolerance must be > 0");
  }
  if (!(absolute_tolerance >= 0.0) || !std::isfinite(absolute_tolerance)) {
    throw std::invalid_argument("QuadratureSpec: absolute_tolerance must be >= 0");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
  }
}

double integrate_interval(const std::function<double(double)>& f,
                          double a,
                          double b,
                          const QuadratureSpec& spec)
{
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_interval: endpoints must be finite");
  }
  if (a == b) {
    return 0.0;
  }

  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  heap.push(gk15(f, a, b));

  double total = heap.top().value;
  double total_error = heap.top().error;

  int splits = 0;
  while (total_error > std::max(spec.absolute_tolerance,
                                spec.relative_tolerance * std::abs(total))) {
    if (splits >= spec.max_subdivisions) {
      throw QuadratureError(
        "integrate_interval: tolerance not reached after " +
        std::to_string(spec.max_subdivisions) +
        " subdivisions (error estimate " + std::to_string(total_error) + ")");
    }
    const Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      heap.push({worst.a, worst.b, worst.value, 0.0});
      total_error -= worst.error;
      continue;
    }
    const Interval left = gk15(f, worst.a, mid);
    const Interval right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }

  // canonical left-to-right re-summation of the final partition
  std::vector<Interval> parts;
  parts.reserve(heap.size());
  while (!heap.empty()) {
    parts.push_back(heap.top());
    heap.pop();
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& l, const Interval& r) { return l.a < r.a; });
  double result = 0.0;
  for (const Interval& p : parts) {
    result += p.value;
  }
  return result;
}

double integrate_semiaxis(const std::function<double(double)>& f,
                          const QuadratureSpec& spec,
                          double split)
{
  spec.validate();
  if (!(split > 0.0) || !std::isfinite(split)) {
    throw std::invalid_argument("integrate_semiaxis: split point must be finite and > 0");
  }

  // head: x = v^2 on (0, split)
  const double vmax = std::sqrt(split);
  const auto head = [&f](double v) { return 2.0 * v * f(v * v); };
  const double head_value = integrate_interval(head, 0.0, vmax, spec);

  // tail: t = split + u/(1-u) on [split, infinity)
  const auto tail = [&f, split](double u) {
    const double om = 1.0 - u;
    const double t = split + u / om;
    return f(t) / (om * om);
  };
  const double tail_value = integrate_interval(tail, 0.0, 1.0, spec);

  return head_value + tail_value;
}

} // namespace gkde
