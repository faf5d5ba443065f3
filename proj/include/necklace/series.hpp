#pragma once

#include <string>
#include <vector>

#include "necklace/poly.hpp"
#include "necklace/rational.hpp"

namespace necklace {

// Power series in z truncated at a fixed order (inclusive): exactly
// order+1 stored coefficients. Binary operations demand equal orders;
// silently coercing to the smaller order is the classic way to end up
// with a wrong asymptotic, so a mismatch throws instead.
//
// Arbitrary-precision rationals keep every operation exact; orders of 400
// and beyond are routine (the counting checks run at order 200).
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<Rational> coeffs);  // pads with zeros up to order

  static TruncSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Exact coefficient of z^m. Asking beyond the order is an out_of_range
  // error, never a silent zero.
  const Rational& coeff(int m) const;
  void set_coeff(int m, Rational value);

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);  // Cauchy product
  friend TruncSeries operator*(const TruncSeries& a, const Rational& s);
  friend TruncSeries operator*(const Rational& s, const TruncSeries& a) { return a * s; }
  // a/b with b(0) != 0 (DomainError otherwise).
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Formal log of a series with constant term 1, computed as the formal
// integral of s'/s. Exact; same order as the input.
TruncSeries series_log(const TruncSeries& s);

// Substitution z -> z^k, truncated at the original order.
TruncSeries compose_zk(const TruncSeries& s, int k);

TruncSeries derivative(const TruncSeries& s);  // order drops by one
TruncSeries integrate(const TruncSeries& s);   // order rises by one, constant term 0
TruncSeries truncate(const TruncSeries& s, int order);

double evaluate(const TruncSeries& s, double z);
Rational evaluate(const TruncSeries& s, const Rational& z);

// Text form used by the JSON interfaces: "num/den" per exponent.
std::vector<std::string> to_fraction_strings(const TruncSeries& s);
TruncSeries series_from_fraction_strings(const std::vector<std::string>& coeffs);

// Truncated bivariate series: the coefficient of z^m is a polynomial in u.
struct BivarTrunc {
  int order_z = 0;
  std::vector<RPoly> coeffs_z;  // size order_z + 1, each with Indet::U

  const RPoly& coeff_z(int m) const;
  bool is_zero() const;
};

}  // namespace necklace
