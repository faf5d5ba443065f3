#include "necklace/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "necklace/errors.hpp"

namespace necklace {

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw UsageError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    const BigInt num{std::string(text.substr(0, slash))};
    const BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw UsageError("zero denominator in rational literal: " + std::string(text));
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw UsageError("malformed rational literal: " + std::string(text));
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert non-finite double to rational");
  return Rational(x);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt factorial(int n) {
  if (n < 0) throw UsageError("factorial of negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace necklace
