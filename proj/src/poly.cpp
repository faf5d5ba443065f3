#include "necklace/poly.hpp"

#include <algorithm>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

const Rational kZero(0);

void check_same_var(const RPoly& a, const RPoly& b) {
  if (a.var() != b.var()) {
    throw UsageError(std::string("indeterminate mismatch: ") + indet_name(a.var()) + " vs " +
                     indet_name(b.var()));
  }
}

}  // namespace

const char* indet_name(Indet v) {
  switch (v) {
    case Indet::U: return "u";
    case Indet::Alpha: return "alpha";
    case Indet::Z: return "z";
  }
  return "?";
}

RPoly::RPoly(Indet var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  normalize();
}

RPoly RPoly::constant(Indet var, Rational value) { return RPoly(var, {std::move(value)}); }

RPoly RPoly::monomial(Indet var, int exponent, Rational coefficient) {
  if (exponent < 0) throw UsageError("negative exponent in monomial");
  std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1, Rational(0));
  c.back() = std::move(coefficient);
  return RPoly(var, std::move(c));
}

const Rational& RPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

void RPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RPoly operator+(const RPoly& a, const RPoly& b) {
  check_same_var(a, b);
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RPoly(a.var_, std::move(c));
}

RPoly operator-(const RPoly& a, const RPoly& b) {
  check_same_var(a, b);
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return RPoly(a.var_, std::move(c));
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  check_same_var(a, b);
  if (a.is_zero() || b.is_zero()) return RPoly(a.var_);
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RPoly(a.var_, std::move(c));
}

RPoly operator*(const RPoly& a, const Rational& s) {
  if (s == 0) return RPoly(a.var_);
  std::vector<Rational> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return RPoly(a.var_, std::move(c));
}

RPoly derivative(const RPoly& p) {
  if (p.degree() < 1) return RPoly(p.var());
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()));
  for (int e = 1; e <= p.degree(); ++e) c[static_cast<std::size_t>(e - 1)] = p.coeff(e) * e;
  return RPoly(p.var(), std::move(c));
}

Rational evaluate(const RPoly& p, const Rational& x) {
  Rational acc(0);
  for (int e = p.degree(); e >= 0; --e) acc = acc * x + p.coeff(e);
  return acc;
}

double evaluate(const RPoly& p, double x) {
  double acc = 0.0;
  for (int e = p.degree(); e >= 0; --e) acc = acc * x + to_double(p.coeff(e));
  return acc;
}

std::vector<std::string> to_fraction_strings(const RPoly& p) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(p.degree()) + 1);
  for (int e = 0; e <= p.degree(); ++e) out.push_back(format_rational(p.coeff(e)));
  return out;
}

RPoly rpoly_from_fraction_strings(Indet var, const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return RPoly(var, std::move(c));
}

}  // namespace necklace
