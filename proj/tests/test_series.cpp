#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "necklace/errors.hpp"
#include "necklace/poly.hpp"
#include "necklace/rng.hpp"
#include "necklace/series.hpp"

using namespace necklace;

namespace {

Rational q(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

RPoly upoly(std::vector<Rational> coeffs) { return RPoly(Indet::U, std::move(coeffs)); }

// Small random series with constant term forced to `constant`; exercises
// the ring-axiom and log/div properties on inputs the implementation never
// saw during development.
TruncSeries random_series(Xoshiro256StarStar& rng, int order, const Rational& constant) {
  TruncSeries s(order);
  s.set_coeff(0, constant);
  for (int m = 1; m <= order; ++m) {
    const long long num = static_cast<long long>(uniform_below(rng, 11)) - 5;
    const long long den = 1 + static_cast<long long>(uniform_below(rng, 4));
    s.set_coeff(m, q(num, den));
  }
  return s;
}

// Test-only formal exponential (the library has no series_exp on purpose):
// exp(s)' = s' exp(s) gives the coefficient recurrence
// (m+1) e_{m+1} = sum_{j} (j+1) s_{j+1} e_{m-j}.
TruncSeries series_exp_oracle(const TruncSeries& s) {
  REQUIRE(s.coeff(0) == 0);
  TruncSeries e(s.order());
  e.set_coeff(0, q(1));
  for (int m = 0; m < s.order(); ++m) {
    Rational acc(0);
    for (int j = 0; j <= m; ++j) acc += Rational(j + 1) * s.coeff(j + 1) * e.coeff(m - j);
    e.set_coeff(m + 1, acc / (m + 1));
  }
  return e;
}

}  // namespace

TEST_CASE("polynomial basics") {
  const RPoly u = RPoly::monomial(Indet::U, 1);
  CHECK(derivative(u) == RPoly::constant(Indet::U, q(1)));

  // w_4(u) = 2u/3 + u^2/3 evaluates to 1 at u = 1 (total probability)
  const RPoly w4 = upoly({q(0), q(2, 3), q(1, 3)});
  CHECK(evaluate(w4, q(1)) == q(1));
  CHECK(evaluate(w4, q(0)) == q(0));

  const RPoly zero(Indet::U);
  CHECK((w4 * zero).is_zero());
  CHECK(w4 * RPoly::constant(Indet::U, q(1)) == w4);
  CHECK(w4 + zero == w4);
  CHECK(zero.degree() == -1);

  // trailing zeros never survive construction
  CHECK(upoly({q(1), q(0)}).degree() == 0);
  CHECK(upoly({q(0), q(0)}).is_zero());
}

TEST_CASE("indeterminate mismatch is a usage error") {
  const RPoly u = RPoly::monomial(Indet::U, 1);
  const RPoly a = RPoly::monomial(Indet::Alpha, 1);
  CHECK_THROWS_AS(u + a, UsageError);
  CHECK_THROWS_AS(u * a, UsageError);
}

TEST_CASE("polynomial fraction-string round trip") {
  const RPoly p = upoly({q(1), q(-2, 3), q(0), q(5, 7)});
  const auto strings = to_fraction_strings(p);
  CHECK(strings == std::vector<std::string>{"1", "-2/3", "0", "5/7"});
  CHECK(rpoly_from_fraction_strings(Indet::U, strings) == p);
}

TEST_CASE("series arithmetic basics") {
  const TruncSeries one_plus(2, {q(1), q(1)});
  const TruncSeries one_minus(2, {q(1), q(-1)});
  const TruncSeries product = one_plus * one_minus;
  CHECK(product.coeff(0) == q(1));
  CHECK(product.coeff(1) == q(0));
  CHECK(product.coeff(2) == q(-1));

  const TruncSeries zero(2);
  CHECK(one_plus + zero == one_plus);

  CHECK_THROWS_AS(one_plus + TruncSeries(3), UsageError);
  CHECK_THROWS_AS((void)product.coeff(3), std::out_of_range);
  CHECK(TruncSeries(2, {q(1), q(0), q(-1)}).coeff(2) == q(-1));
}

TEST_CASE("series multiplication is associative and commutative (random)") {
  Xoshiro256StarStar rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = 3 + static_cast<int>(uniform_below(rng, 5));
    const auto a = random_series(rng, order, q(static_cast<long long>(uniform_below(rng, 5))));
    const auto b = random_series(rng, order, q(static_cast<long long>(uniform_below(rng, 5))));
    const auto c = random_series(rng, order, q(static_cast<long long>(uniform_below(rng, 5))));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("series division") {
  const int order = 8;
  TruncSeries geometric(order);
  for (int m = 0; m <= order; ++m) geometric.set_coeff(m, q(1));
  const TruncSeries one_minus_z(order, {q(1), q(-1)});
  CHECK(TruncSeries::one(order) / one_minus_z == geometric);

  Xoshiro256StarStar rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 6, q(static_cast<long long>(uniform_below(rng, 7))));
    const auto b = random_series(rng, 6, q(1 + static_cast<long long>(uniform_below(rng, 5))));
    CHECK((a / b) * b == a);
    CHECK(b / b == TruncSeries::one(6));
  }
  CHECK_THROWS_AS(TruncSeries::one(3) / TruncSeries(3), DomainError);
}

TEST_CASE("series log") {
  const int order = 9;
  const TruncSeries one_minus_z(order, {q(1), q(-1)});
  const TruncSeries geometric = TruncSeries::one(order) / one_minus_z;
  const TruncSeries log_geo = series_log(geometric);
  CHECK(log_geo.coeff(0) == q(0));
  for (int m = 1; m <= order; ++m) CHECK(log_geo.coeff(m) == q(1, m));

  CHECK(series_log(TruncSeries::one(order)) == TruncSeries(order));
  CHECK_THROWS_AS(series_log(TruncSeries(order)), DomainError);

  // log is a homomorphism and exp inverts it
  Xoshiro256StarStar rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_series(rng, 7, q(1));
    auto b = random_series(rng, 7, q(1));
    CHECK(series_log(a * b) == series_log(a) + series_log(b));
    CHECK(series_exp_oracle(series_log(a)) == a);
  }
}

TEST_CASE("compose_zk") {
  const TruncSeries one_minus_z(4, {q(1), q(-1)});
  const TruncSeries composed = compose_zk(one_minus_z, 2);
  CHECK(composed.coeff(0) == q(1));
  CHECK(composed.coeff(1) == q(0));
  CHECK(composed.coeff(2) == q(-1));
  CHECK(composed.coeff(3) == q(0));
  CHECK(composed.coeff(4) == q(0));

  Xoshiro256StarStar rng(14);
  const auto s = random_series(rng, 9, q(3));
  CHECK(compose_zk(s, 1) == s);
  for (const int k : {2, 3, 4}) {
    const auto c = compose_zk(s, k);
    for (int m = 0; m <= 9; ++m) {
      CHECK(c.coeff(m) == (m % k == 0 ? s.coeff(m / k) : q(0)));
    }
  }
}

TEST_CASE("series fraction-string round trip") {
  Xoshiro256StarStar rng(15);
  const auto s = random_series(rng, 6, q(-2, 3));
  CHECK(series_from_fraction_strings(to_fraction_strings(s)) == s);
}

TEST_CASE("rational text forms") {
  CHECK(format_rational(q(2, 6)) == "1/3");
  CHECK(format_rational(q(-4, 2)) == "-2");
  CHECK(format_rational(q(0)) == "0");
  CHECK(parse_rational("2/3") == q(2, 3));
  CHECK(parse_rational("-7") == q(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  CHECK_THROWS_AS(parse_rational(""), UsageError);

  CHECK(rational_from_double(0.25) == q(1, 4));
  CHECK(rational_from_double(0.1) != q(1, 10));  // 0.1 is not a dyadic rational
  CHECK(to_double(q(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // conversion stays accurate for huge numerators and denominators
  const Rational huge(factorial(200) - 1, factorial(200) * 3);
  CHECK(to_double(huge) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}
