#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "necklace/rational.hpp"

namespace necklace {

// Formal indeterminate tag. Mixing indeterminates in a binary operation is
// a usage error; the tag exists to catch that class of bug at the boundary
// instead of deep inside a recurrence.
enum class Indet : std::uint8_t { U, Alpha, Z };

const char* indet_name(Indet v);

// Dense univariate polynomial with exact rational coefficients.
// Invariant: the highest stored coefficient is nonzero; the zero polynomial
// stores nothing and reports degree() == -1.
class RPoly {
 public:
  explicit RPoly(Indet var) : var_(var) {}
  RPoly(Indet var, std::vector<Rational> coeffs);

  static RPoly constant(Indet var, Rational value);
  static RPoly monomial(Indet var, int exponent, Rational coefficient = Rational(1));

  Indet var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of var^exponent; zero beyond the degree.
  const Rational& coeff(int exponent) const;

  friend RPoly operator+(const RPoly& a, const RPoly& b);
  friend RPoly operator-(const RPoly& a, const RPoly& b);
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend RPoly operator*(const RPoly& a, const Rational& s);
  friend RPoly operator*(const Rational& s, const RPoly& a) { return a * s; }
  friend bool operator==(const RPoly& a, const RPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  Indet var_;
  std::vector<Rational> coeffs_;
};

// Formal d/dvar.
RPoly derivative(const RPoly& p);

Rational evaluate(const RPoly& p, const Rational& x);
double evaluate(const RPoly& p, double x);

// Text form used by the JSON interfaces: one "num/den" string per
// exponent, index = exponent, exactness preserved.
std::vector<std::string> to_fraction_strings(const RPoly& p);
RPoly rpoly_from_fraction_strings(Indet var, const std::vector<std::string>& coeffs);

}  // namespace necklace
