#include "necklace/stats.hpp"

#include <cmath>

#include "necklace/errors.hpp"

namespace necklace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0) throw DomainError("gamma shape must be positive");
  if (x < 0.0) throw DomainError("gamma argument must be nonnegative");
  if (x == 0.0) return 0.0;
  const double log_prefix = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    // P(a,x) = x^a e^-x / Gamma(a) * sum_{k>=0} x^k / (a (a+1) ... (a+k)).
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(log_prefix);
  }
  // Q(a,x) via the continued fraction 1/(x+1-a- 1(1-a)/(x+3-a- ...)),
  // evaluated with the modified Lentz method.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(log_prefix) * h;
}

double chi_square_cdf(double x, int dof) {
  if (dof < 1) throw DomainError("chi-square needs dof >= 1");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(dof / 2.0, x / 2.0);
}

double chi_square_quantile(double p, int dof) {
  if (dof < 1) throw DomainError("chi-square needs dof >= 1");
  if (!(p > 0.0) || !(p < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
  double lo = 0.0;
  double hi = 1.0;
  while (chi_square_cdf(hi, dof) < p) {
    hi *= 2.0;
    if (hi > 1e9) throw DomainError("chi-square quantile out of numeric range");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    (chi_square_cdf(mid, dof) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace necklace
