#pragma once

namespace necklace {

// Standard normal CDF, Phi(x) = erfc(-x / sqrt(2)) / 2. std::erfc is
// correctly rounded to within a few ulp, so the absolute error here is
// below 1e-15 — far inside the 1e-10 the distribution diagnostics need.
double normal_cdf(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0, via the
// classic pair of expansions: the ascending series for x < a + 1 and the
// Lentz continued fraction for the upper tail otherwise. Relative error
// around 1e-14.
double regularized_gamma_p(double a, double x);

// Chi-square CDF with dof degrees of freedom: P(dof/2, x/2).
double chi_square_cdf(double x, int dof);

// Inverse of the above by bisection; absolute error below 1e-9.
double chi_square_quantile(double p, int dof);

}  // namespace necklace
