#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "necklace/poly.hpp"
#include "necklace/rational.hpp"
#include "necklace/series.hpp"

namespace necklace {

// Exact distribution of the white-bead count W_n under a uniformly random
// construction process, for every n in 2..n_max. Rows are built from the
// total-probability recurrence
//
//   w_{n+1,k} = (2k/n) w_{n,k} + (1 - 2(k-1)/n) w_{n,k-1},   w_{2,1} = 1,
//
// which encodes the one-step transition: k of the n gaps sit left of a
// white bead, k sit right of one, and the remaining n - 2k accept a white.
// Memory grows quadratically in n_max; a few hundred rows is cheap, and
// single large rows should use process_count_row instead.
class DistTable {
 public:
  explicit DistTable(int n_max);

  int n_max() const { return n_max_; }

  // Exact P(W_n = k); zero outside the support 1..floor(n/2).
  // Throws UsageError when n is outside 2..n_max.
  const Rational& prob(int n, int k) const;

  // Support row as a map k -> P(W_n = k).
  std::map<int, Rational> row(int n) const;

 private:
  int n_max_;
  std::vector<std::vector<Rational>> rows_;  // rows_[n-2][k-1], k = 1..floor(n/2)
  Rational zero_;
};

// Integer companion of DistTable: c_{n,k} counts the construction processes
// that end in a size-n necklace with k whites, so c_{n,k} = w_{n,k} (n-1)!.
// Computed purely in integer arithmetic from the Eulerian-style recurrence
//
//   c_{n,k} = 2k c_{n-1,k} + (n+1-2k) c_{n-1,k-1},   c_{2,1} = 1.
class ProcessCountTable {
 public:
  explicit ProcessCountTable(int n_max);

  int n_max() const { return n_max_; }
  const BigInt& count(int n, int k) const;  // zero outside the support
  std::map<int, BigInt> row(int n) const;

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

// One row of the integer table, computed with rolling storage: O(n) memory
// instead of the full table's O(n^2). total = (n-1)!.
struct ProcessCountRow {
  int n = 0;
  std::vector<BigInt> counts;  // counts[k-1] = c_{n,k}, k = 1..floor(n/2)
  BigInt total;
};
ProcessCountRow process_count_row(int n);

struct MomentPair {
  int n = 0;
  Rational mean;
  Rational variance;
};

// Exact mean/variance of W_n from the table row. The closed forms n/3 and
// 2n/45 hold from n = 3 and n = 6 respectively (n = 4 genuinely deviates
// with variance 2/9).
MomentPair moments_white(int n, const DistTable& table);
// B_n = n - W_n: mean n - EW_n, same variance.
MomentPair moments_black(int n, const DistTable& table);

// Probability generating function w_n(u) = sum_k P(W_n = k) u^k, computed
// by the derivative recurrence w_{n+1}(u) = (2u(1-u)/n) w_n'(u) + u w_n(u)
// from w_2(u) = u. Coefficients must agree with the DistTable row.
RPoly pgf(int n);

// The even polynomials r_n(alpha) with w_n(u) = u * r_n(alpha) under
// alpha^2 = 1 - u, from the convolution recurrence
//
//   r_n = (2a)^{n-2}/(n-1)! + (1-a) * sum_{k=0}^{n-2} (2a)^k/(k+1)! r_{n-1-k}
//
// with r_1 = 0. Evenness is a theorem, not an assumption: any surviving odd
// coefficient raises ConsistencyError. r_polys returns r_1..r_{n_max}
// (index i holds r_i; index 0 is the zero polynomial).
std::vector<RPoly> r_polys(int n_max);
RPoly r_poly(int n);

// Substitutes alpha^2 = 1 - u into the even polynomial r_n and multiplies
// by u; equals pgf(n) exactly. The _all variant shares one r_polys pass
// across 2..n_max (index i holds the result for size i, indices 0..1 are
// zero).
RPoly r_to_pgf(int n);
std::vector<RPoly> r_to_pgf_all(int n_max);

// z-truncation of W(z,u) = sum_{n>=2} w_n(u) z^{n-1}: the coefficient of
// z^m is w_{m+1}(u) (zero at m = 0).
BivarTrunc truncated_W(int order_z);

// Residual of the defining PDE,
//
//   dW/dz * (1 - z u) - 2u(1-u) dW/du - u W - u,
//
// evaluated on a z-truncation. Only z-powers strictly below the input
// order are fully determined, so the result has order one less; every
// returned coefficient must vanish when the input truncates the true W.
BivarTrunc pde_residual_of(const BivarTrunc& w);
BivarTrunc pde_residual(int order_z);  // order_z >= 2

// Numeric evaluation of the closed form
//
//   W(z,u) = u / (sqrt(1-u) coth(z sqrt(1-u)) - 1)
//
// on the real box 0 < z <= 0.5, 0 < u <= 1. Near u = 1 (|1-u| < 1e-6) the
// direct form degenerates (removably), so the evaluation switches to the
// even series of x*coth(x) in y = x^2 = z^2(1-u), truncated at
// order_fallback and computed exactly before rounding; at u = 1 this
// recovers W(z,1) = z/(1-z). A denominator within 1e-12 of zero raises
// PoleError (cannot happen inside the supported box; the guard protects
// future domain extensions).
double closed_form_eval(double z, double u, int order_fallback = 8);

// The equivalent exponential form u (e^{2za} - 1) / (e^{2za}(a-1) + a + 1),
// a = sqrt(1-u), rearranged around expm1 so the removable point a = 0
// evaluates directly. Agrees with closed_form_eval to ~1e-15.
double closed_form_eval_exp(double z, double u);

// Exact partial sum  sum_{n=2}^{max_n} w_n(u) z^{n-1}  at rational points;
// the series-side oracle for the closed-form evaluations above.
Rational truncated_W_eval(const Rational& z, const Rational& u, int max_n);

// Kolmogorov distance between the standardized exact law of W_n (centered
// at n/3, scaled by sqrt(2n/45)) and the standard normal CDF, taken over
// the full finite support. Requires n >= 6 (the variance normalization).
double normal_distance(int n, const DistTable& table);
double normal_distance(const ProcessCountRow& row);

// Table exports. CSV carries the header "n,k,value"; the JSON form is an
// array of {"n": .., "k": .., "value": ".."} rows with the same cells.
// Values are exact decimal strings ("num/den" for non-integers).
void write_csv(std::ostream& out, const DistTable& table);
void write_csv(std::ostream& out, const ProcessCountTable& table);
void write_json_rows(std::ostream& out, const DistTable& table);
void write_json_rows(std::ostream& out, const ProcessCountTable& table);

}  // namespace necklace
