#include "sivcm/chisq.hpp"

#include <cmath>
#include <limits>

#include "sivcm/errors.hpp"

namespace sivcm {

namespace {

// Series expansion of P(a,x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x) = 1 - P(a,x), valid for x >= a + 1
// (modified Lentz evaluation).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x)) {
    raise(errc::invalid_argument, "gamma_p requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double chisq_cdf(double x, int p) {
  if (p < 1) raise(errc::invalid_argument, "degrees of freedom must be >= 1");
  if (x <= 0.0) return 0.0;
  return gamma_p(0.5 * static_cast<double>(p), 0.5 * x);
}

double chisq_pdf(double x, int p) {
  if (p < 1) raise(errc::invalid_argument, "degrees of freedom must be >= 1");
  if (x <= 0.0) return 0.0;
  const double a = 0.5 * static_cast<double>(p);
  return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * std::log(2.0) -
                  std::lgamma(a));
}

double chisq_quantile(int p, double alpha) {
  if (p < 1) raise(errc::invalid_argument, "degrees of freedom must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    raise(errc::invalid_argument, "alpha must lie in [0,1]");
  }
  const double target = 1.0 - alpha;
  if (target <= 0.0) return 0.0;
  if (target >= 1.0) return std::numeric_limits<double>::infinity();

  double lo = 0.0;
  double hi = static_cast<double>(p);
  while (chisq_cdf(hi, p) < target) hi *= 2.0;
  while (hi - lo > 1e-10 * (1.0 + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (chisq_cdf(mid, p) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sivcm
