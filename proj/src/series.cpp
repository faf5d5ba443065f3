#include "necklace/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

void check_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw UsageError("truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}

}  // namespace

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw UsageError("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(int order, std::vector<Rational> coeffs) {
  if (order < 0) throw UsageError("series order must be >= 0");
  if (coeffs.size() > static_cast<std::size_t>(order) + 1) {
    throw UsageError("coefficient list longer than order allows");
  }
  coeffs_ = std::move(coeffs);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const Rational& TruncSeries::coeff(int m) const {
  if (m < 0 || m > order()) {
    throw std::out_of_range("series coefficient index " + std::to_string(m) +
                            " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(m)];
}

void TruncSeries::set_coeff(int m, Rational value) {
  if (m < 0 || m > order()) {
    throw std::out_of_range("series coefficient index " + std::to_string(m) +
                            " beyond truncation order " + std::to_string(order()));
  }
  coeffs_[static_cast<std::size_t>(m)] = std::move(value);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries c(a.order());
  for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return c;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries c(a.order());
  for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return c;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries c(a.order());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return c;
}

TruncSeries operator*(const TruncSeries& a, const Rational& s) {
  TruncSeries c(a.order());
  for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] = a.coeffs_[i] * s;
  return c;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  if (b.coeffs_[0] == 0) throw DomainError("series division by a series with zero constant term");
  TruncSeries q(a.order());
  for (std::size_t m = 0; m < q.coeffs_.size(); ++m) {
    Rational acc = a.coeffs_[m];
    for (std::size_t j = 1; j <= m; ++j) acc -= b.coeffs_[j] * q.coeffs_[m - j];
    q.coeffs_[m] = acc / b.coeffs_[0];
  }
  return q;
}

TruncSeries series_log(const TruncSeries& s) {
  if (s.coeff(0) != 1) throw DomainError("series_log requires constant term 1");
  if (s.order() == 0) return TruncSeries(0);
  // log s = integral of s'/s; every coefficient of the result depends only
  // on coefficients of s up to the same index, so the truncated quotient
  // at order-1 integrates to the exact log through the full order.
  const TruncSeries num = derivative(s);
  const TruncSeries den = truncate(s, s.order() - 1);
  return integrate(num / den);
}

TruncSeries compose_zk(const TruncSeries& s, int k) {
  if (k < 1) throw UsageError("compose_zk requires k >= 1");
  TruncSeries c(s.order());
  for (int j = 0; j * k <= s.order(); ++j) c.set_coeff(j * k, s.coeff(j));
  return c;
}

TruncSeries derivative(const TruncSeries& s) {
  if (s.order() == 0) throw UsageError("cannot differentiate an order-0 series");
  TruncSeries d(s.order() - 1);
  for (int m = 1; m <= s.order(); ++m) d.set_coeff(m - 1, s.coeff(m) * m);
  return d;
}

TruncSeries integrate(const TruncSeries& s) {
  TruncSeries in(s.order() + 1);
  for (int m = 0; m <= s.order(); ++m) in.set_coeff(m + 1, s.coeff(m) / (m + 1));
  return in;
}

TruncSeries truncate(const TruncSeries& s, int order) {
  if (order > s.order()) throw UsageError("truncate cannot extend a series");
  TruncSeries t(order);
  for (int m = 0; m <= order; ++m) t.set_coeff(m, s.coeff(m));
  return t;
}

double evaluate(const TruncSeries& s, double z) {
  double acc = 0.0;
  for (int m = s.order(); m >= 0; --m) acc = acc * z + to_double(s.coeff(m));
  return acc;
}

Rational evaluate(const TruncSeries& s, const Rational& z) {
  Rational acc(0);
  for (int m = s.order(); m >= 0; --m) acc = acc * z + s.coeff(m);
  return acc;
}

std::vector<std::string> to_fraction_strings(const TruncSeries& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int m = 0; m <= s.order(); ++m) out.push_back(format_rational(s.coeff(m)));
  return out;
}

TruncSeries series_from_fraction_strings(const std::vector<std::string>& coeffs) {
  if (coeffs.empty()) throw UsageError("series text form needs at least the constant term");
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return TruncSeries(static_cast<int>(coeffs.size()) - 1, std::move(c));
}

const RPoly& BivarTrunc::coeff_z(int m) const {
  if (m < 0 || m > order_z) {
    throw std::out_of_range("bivariate z-power " + std::to_string(m) + " beyond truncation order " +
                            std::to_string(order_z));
  }
  return coeffs_z[static_cast<std::size_t>(m)];
}

bool BivarTrunc::is_zero() const {
  return std::all_of(coeffs_z.begin(), coeffs_z.end(), [](const RPoly& p) { return p.is_zero(); });
}

}  // namespace necklace
