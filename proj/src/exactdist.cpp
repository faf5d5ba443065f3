#include "necklace/exactdist.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "necklace/errors.hpp"
#include "necklace/stats.hpp"

namespace necklace {

namespace {

int support_max(int n) { return n / 2; }

// One step of the PGF recurrence: w_{n+1}(u) = (2u(1-u)/n) w_n'(u) + u w_n(u).
RPoly pgf_step(const RPoly& w, int n) {
  const RPoly factor = RPoly::monomial(Indet::U, 1, Rational(2, n)) -
                       RPoly::monomial(Indet::U, 2, Rational(2, n));
  return factor * derivative(w) + RPoly::monomial(Indet::U, 1) * w;
}

void check_even(const RPoly& r, int n) {
  for (int e = 1; e <= r.degree(); e += 2) {
    if (r.coeff(e) != 0) {
      throw ConsistencyError("r_" + std::to_string(n) + " has a nonzero odd coefficient at alpha^" +
                             std::to_string(e));
    }
  }
}

// alpha^{2j} -> (1-u)^j; input must be even.
RPoly substitute_alpha_squared(const RPoly& r) {
  const RPoly one_minus_u =
      RPoly::constant(Indet::U, Rational(1)) - RPoly::monomial(Indet::U, 1);
  RPoly result(Indet::U);
  RPoly power = RPoly::constant(Indet::U, Rational(1));
  for (int j = 0; 2 * j <= r.degree(); ++j) {
    if (j > 0) power = power * one_minus_u;
    const Rational& c = r.coeff(2 * j);
    if (c != 0) result = result + power * c;
  }
  return result;
}

// Taylor coefficients of x*coth(x) as a series in y = x^2, exact until the
// final rounding: cosh(x) = sum y^m/(2m)! divided by sinh(x)/x = sum
// y^m/(2m+1)!.
std::vector<double> x_coth_x_coefficients(int order) {
  TruncSeries cosh_even(order);
  TruncSeries sinhc_even(order);
  BigInt fact = 1;  // (2m)! running value
  for (int m = 0; m <= order; ++m) {
    if (m > 0) fact *= BigInt(2 * m - 1) * (2 * m);
    cosh_even.set_coeff(m, Rational(BigInt(1), fact));
    sinhc_even.set_coeff(m, Rational(BigInt(1), fact * (2 * m + 1)));
  }
  const TruncSeries f = cosh_even / sinhc_even;
  std::vector<double> out(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) out[static_cast<std::size_t>(m)] = to_double(f.coeff(m));
  return out;
}

void check_eval_domain(double z, double u) {
  if (!(z > 0.0) || z > 0.5) throw DomainError("z must lie in (0, 0.5]");
  if (!(u > 0.0) || u > 1.0) throw DomainError("u must lie in (0, 1]");
}

}  // namespace

DistTable::DistTable(int n_max) : n_max_(n_max), zero_(0) {
  if (n_max < 2) throw UsageError("distribution table needs n_max >= 2");
  rows_.reserve(static_cast<std::size_t>(n_max) - 1);
  rows_.push_back({Rational(1)});  // n = 2: W_2 = 1 with certainty
  for (int n = 2; n < n_max; ++n) {
    const auto& prev = rows_.back();
    const int kmax = support_max(n + 1);
    std::vector<Rational> next(static_cast<std::size_t>(kmax), Rational(0));
    for (int k = 1; k <= kmax; ++k) {
      Rational acc(0);
      if (k <= support_max(n)) acc += Rational(2 * k, n) * prev[static_cast<std::size_t>(k - 1)];
      if (k >= 2 && k - 1 <= support_max(n)) {
        acc += (Rational(1) - Rational(2 * (k - 1), n)) * prev[static_cast<std::size_t>(k - 2)];
      }
      next[static_cast<std::size_t>(k - 1)] = std::move(acc);
    }
    rows_.push_back(std::move(next));
  }
  // Row audit: unit mass and a fully positive support.
  for (int n = 2; n <= n_max_; ++n) {
    Rational sum(0);
    for (const auto& w : rows_[static_cast<std::size_t>(n - 2)]) {
      if (w <= 0) throw ConsistencyError("nonpositive probability in row n=" + std::to_string(n));
      sum += w;
    }
    if (sum != 1) throw ConsistencyError("row n=" + std::to_string(n) + " does not sum to 1");
  }
}

const Rational& DistTable::prob(int n, int k) const {
  if (n < 2 || n > n_max_) {
    throw UsageError("n=" + std::to_string(n) + " outside table range 2.." + std::to_string(n_max_));
  }
  if (k < 1 || k > support_max(n)) return zero_;
  return rows_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)];
}

std::map<int, Rational> DistTable::row(int n) const {
  std::map<int, Rational> out;
  for (int k = 1; k <= support_max(n); ++k) out.emplace(k, prob(n, k));
  return out;
}

ProcessCountTable::ProcessCountTable(int n_max) : n_max_(n_max), zero_(0) {
  if (n_max < 2) throw UsageError("process count table needs n_max >= 2");
  rows_.reserve(static_cast<std::size_t>(n_max) - 1);
  rows_.push_back({BigInt(1)});
  BigInt fact = 1;  // (n-1)! running value
  for (int n = 3; n <= n_max; ++n) {
    const auto& prev = rows_.back();
    const int kmax = support_max(n);
    std::vector<BigInt> next(static_cast<std::size_t>(kmax), BigInt(0));
    for (int k = 1; k <= kmax; ++k) {
      BigInt acc = 0;
      if (k <= support_max(n - 1)) acc += 2 * k * prev[static_cast<std::size_t>(k - 1)];
      if (k >= 2 && k - 1 <= support_max(n - 1)) {
        acc += BigInt(n + 1 - 2 * k) * prev[static_cast<std::size_t>(k - 2)];
      }
      next[static_cast<std::size_t>(k - 1)] = std::move(acc);
    }
    rows_.push_back(std::move(next));
  }
  for (int n = 2; n <= n_max_; ++n) {
    fact *= (n > 2) ? (n - 1) : 1;
    BigInt sum = 0;
    for (const auto& c : rows_[static_cast<std::size_t>(n - 2)]) {
      if (c < 0) throw ConsistencyError("negative process count in row n=" + std::to_string(n));
      sum += c;
    }
    if (sum != fact) {
      throw ConsistencyError("row n=" + std::to_string(n) + " does not sum to (n-1)!");
    }
  }
}

const BigInt& ProcessCountTable::count(int n, int k) const {
  if (n < 2 || n > n_max_) {
    throw UsageError("n=" + std::to_string(n) + " outside table range 2.." + std::to_string(n_max_));
  }
  if (k < 1 || k > support_max(n)) return zero_;
  return rows_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)];
}

std::map<int, BigInt> ProcessCountTable::row(int n) const {
  std::map<int, BigInt> out;
  for (int k = 1; k <= support_max(n); ++k) out.emplace(k, count(n, k));
  return out;
}

ProcessCountRow process_count_row(int n) {
  if (n < 2) throw UsageError("process count row needs n >= 2");
  std::vector<BigInt> cur{BigInt(1)};
  for (int m = 3; m <= n; ++m) {
    const int kmax = support_max(m);
    std::vector<BigInt> next(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
      BigInt acc = 0;
      if (k <= support_max(m - 1)) acc += 2 * k * cur[static_cast<std::size_t>(k - 1)];
      if (k >= 2 && k - 1 <= support_max(m - 1)) {
        acc += BigInt(m + 1 - 2 * k) * cur[static_cast<std::size_t>(k - 2)];
      }
      next[static_cast<std::size_t>(k - 1)] = std::move(acc);
    }
    cur = std::move(next);
  }
  ProcessCountRow row;
  row.n = n;
  row.counts = std::move(cur);
  row.total = factorial(n - 1);
  return row;
}

MomentPair moments_white(int n, const DistTable& table) {
  if (n < 2 || n > table.n_max()) throw UsageError("n outside table range");
  Rational mean(0);
  Rational second(0);
  for (int k = 1; k <= support_max(n); ++k) {
    const Rational& w = table.prob(n, k);
    mean += k * w;
    second += k * k * w;
  }
  MomentPair mp;
  mp.n = n;
  mp.variance = second - mean * mean;
  mp.mean = std::move(mean);
  return mp;
}

MomentPair moments_black(int n, const DistTable& table) {
  MomentPair white = moments_white(n, table);
  MomentPair mp;
  mp.n = n;
  mp.mean = Rational(n) - white.mean;
  mp.variance = std::move(white.variance);
  return mp;
}

RPoly pgf(int n) {
  if (n < 2) throw UsageError("pgf needs n >= 2");
  RPoly w = RPoly::monomial(Indet::U, 1);  // w_2(u) = u
  for (int m = 2; m < n; ++m) w = pgf_step(w, m);
  return w;
}

std::vector<RPoly> r_polys(int n_max) {
  if (n_max < 1) throw UsageError("r_polys needs n_max >= 1");
  std::vector<RPoly> r;
  r.reserve(static_cast<std::size_t>(n_max) + 1);
  r.emplace_back(Indet::Alpha);  // index 0 unused
  r.emplace_back(Indet::Alpha);  // r_1 = 0
  const RPoly one_minus_alpha =
      RPoly::constant(Indet::Alpha, Rational(1)) - RPoly::monomial(Indet::Alpha, 1);
  for (int n = 2; n <= n_max; ++n) {
    RPoly acc = RPoly::monomial(Indet::Alpha, n - 2, Rational(BigInt(1) << (n - 2), factorial(n - 1)));
    RPoly sum(Indet::Alpha);
    for (int k = 0; k <= n - 2; ++k) {
      const RPoly& prev = r[static_cast<std::size_t>(n - 1 - k)];
      if (prev.is_zero()) continue;
      sum = sum + RPoly::monomial(Indet::Alpha, k, Rational(BigInt(1) << k, factorial(k + 1))) * prev;
    }
    acc = acc + one_minus_alpha * sum;
    check_even(acc, n);
    r.push_back(std::move(acc));
  }
  return r;
}

RPoly r_poly(int n) {
  if (n < 1) throw UsageError("r_poly needs n >= 1");
  std::vector<RPoly> all = r_polys(n);
  return std::move(all.back());
}

RPoly r_to_pgf(int n) {
  if (n < 2) throw UsageError("r_to_pgf needs n >= 2");
  return substitute_alpha_squared(r_poly(n)) * RPoly::monomial(Indet::U, 1);
}

std::vector<RPoly> r_to_pgf_all(int n_max) {
  if (n_max < 2) throw UsageError("r_to_pgf_all needs n_max >= 2");
  const std::vector<RPoly> rs = r_polys(n_max);
  const RPoly u = RPoly::monomial(Indet::U, 1);
  std::vector<RPoly> out;
  out.reserve(rs.size());
  out.emplace_back(Indet::U);
  out.emplace_back(Indet::U);
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(substitute_alpha_squared(rs[static_cast<std::size_t>(n)]) * u);
  }
  return out;
}

BivarTrunc truncated_W(int order_z) {
  if (order_z < 1) throw UsageError("truncated_W needs order_z >= 1");
  BivarTrunc w;
  w.order_z = order_z;
  w.coeffs_z.reserve(static_cast<std::size_t>(order_z) + 1);
  w.coeffs_z.emplace_back(Indet::U);  // z^0 term vanishes
  RPoly row = RPoly::monomial(Indet::U, 1);
  for (int m = 1; m <= order_z; ++m) {
    w.coeffs_z.push_back(row);  // z^m carries w_{m+1}(u)
    row = pgf_step(row, m + 1);
  }
  for (int m = 1; m <= order_z; ++m) {
    if (w.coeffs_z[static_cast<std::size_t>(m)].degree() > (m + 1) / 2) {
      throw ConsistencyError("w_" + std::to_string(m + 1) + " exceeds the white-count degree bound");
    }
  }
  return w;
}

BivarTrunc pde_residual_of(const BivarTrunc& w) {
  if (w.order_z < 1) throw UsageError("PDE residual needs order_z >= 1");
  const RPoly u = RPoly::monomial(Indet::U, 1);
  const RPoly diffusion = RPoly::monomial(Indet::U, 1, Rational(2)) -
                          RPoly::monomial(Indet::U, 2, Rational(2));  // 2u(1-u)
  BivarTrunc res;
  res.order_z = w.order_z - 1;
  res.coeffs_z.reserve(static_cast<std::size_t>(w.order_z));
  for (int m = 0; m < w.order_z; ++m) {
    RPoly term = Rational(m + 1) * w.coeff_z(m + 1);      // from dW/dz
    if (m >= 1) term = term - Rational(m) * (u * w.coeff_z(m));  // from -zu * dW/dz
    term = term - diffusion * derivative(w.coeff_z(m));
    term = term - u * w.coeff_z(m);
    if (m == 0) term = term - u;
    res.coeffs_z.push_back(std::move(term));
  }
  return res;
}

BivarTrunc pde_residual(int order_z) {
  if (order_z < 2) throw UsageError("pde_residual needs order_z >= 2");
  return pde_residual_of(truncated_W(order_z));
}

double closed_form_eval(double z, double u, int order_fallback) {
  check_eval_domain(z, u);
  if (order_fallback < 2) throw UsageError("fallback order must be >= 2");
  if (1.0 - u < 1e-6) {
    // W = u z / (f(y) - z) with f(y) = x coth x, y = x^2 = z^2 (1-u).
    const std::vector<double> c = x_coth_x_coefficients(order_fallback);
    const double y = z * z * (1.0 - u);
    double f = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) f = f * y + *it;
    const double den = f - z;
    if (std::abs(den) < 1e-12) throw PoleError("closed form evaluated too close to a pole");
    return u * z / den;
  }
  const double alpha = std::sqrt(1.0 - u);
  const double x = z * alpha;
  const double den = alpha * std::cosh(x) / std::sinh(x) - 1.0;
  if (std::abs(den) < 1e-12) throw PoleError("closed form evaluated too close to a pole");
  return u / den;
}

double closed_form_eval_exp(double z, double u) {
  check_eval_domain(z, u);
  const double alpha = std::sqrt(1.0 - u);
  // E = (e^{2za} - 1)/a, finite at a = 0 where it equals 2z; then
  // W = u E / ((a-1) E + 2).
  const double e = (alpha == 0.0) ? 2.0 * z : std::expm1(2.0 * z * alpha) / alpha;
  const double den = (alpha - 1.0) * e + 2.0;
  if (std::abs(den) < 1e-12) throw PoleError("closed form evaluated too close to a pole");
  return u * e / den;
}

Rational truncated_W_eval(const Rational& z, const Rational& u, int max_n) {
  if (max_n < 2) throw UsageError("truncated_W_eval needs max_n >= 2");
  Rational sum(0);
  Rational z_power = z;  // z^{n-1}, starting at n = 2
  RPoly row = RPoly::monomial(Indet::U, 1);
  for (int n = 2; n <= max_n; ++n) {
    sum += evaluate(row, u) * z_power;
    if (n < max_n) {
      row = pgf_step(row, n);
      z_power *= z;
    }
  }
  return sum;
}

double normal_distance(const ProcessCountRow& row) {
  const int n = row.n;
  if (n < 6) throw DomainError("normal distance needs n >= 6");
  const double sigma = std::sqrt(2.0 * n / 45.0);
  const double mu = n / 3.0;
  double dist = 0.0;
  BigInt cumulative = 0;
  for (std::size_t i = 0; i < row.counts.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    const double x = (k - mu) / sigma;
    const double phi = normal_cdf(x);
    const double below = to_double(Rational(cumulative, row.total));
    cumulative += row.counts[i];
    const double at = to_double(Rational(cumulative, row.total));
    dist = std::max({dist, std::abs(below - phi), std::abs(at - phi)});
  }
  return dist;
}

double normal_distance(int n, const DistTable& table) {
  if (n < 6) throw DomainError("normal distance needs n >= 6");
  if (n > table.n_max()) throw UsageError("n outside table range");
  const double sigma = std::sqrt(2.0 * n / 45.0);
  const double mu = n / 3.0;
  double dist = 0.0;
  Rational cumulative(0);
  for (int k = 1; k <= support_max(n); ++k) {
    const double x = (k - mu) / sigma;
    const double phi = normal_cdf(x);
    const double below = to_double(cumulative);
    cumulative += table.prob(n, k);
    const double at = to_double(cumulative);
    dist = std::max({dist, std::abs(below - phi), std::abs(at - phi)});
  }
  return dist;
}

void write_csv(std::ostream& out, const DistTable& table) {
  out << "n,k,value\n";
  for (int n = 2; n <= table.n_max(); ++n) {
    for (int k = 1; k <= support_max(n); ++k) {
      out << n << ',' << k << ',' << format_rational(table.prob(n, k)) << '\n';
    }
  }
}

void write_csv(std::ostream& out, const ProcessCountTable& table) {
  out << "n,k,value\n";
  for (int n = 2; n <= table.n_max(); ++n) {
    for (int k = 1; k <= support_max(n); ++k) {
      out << n << ',' << k << ',' << table.count(n, k).str() << '\n';
    }
  }
}

namespace {

// Values are digits, '-' and '/', so no JSON escaping is ever needed.
template <typename ValueOf>
void write_rows_as_json(std::ostream& out, int n_max, ValueOf&& value_of) {
  out << "[";
  bool first = true;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k <= support_max(n); ++k) {
      out << (first ? "" : ",") << "\n  {\"n\": " << n << ", \"k\": " << k << ", \"value\": \""
          << value_of(n, k) << "\"}";
      first = false;
    }
  }
  out << "\n]\n";
}

}  // namespace

void write_json_rows(std::ostream& out, const DistTable& table) {
  write_rows_as_json(out, table.n_max(),
                     [&](int n, int k) { return format_rational(table.prob(n, k)); });
}

void write_json_rows(std::ostream& out, const ProcessCountTable& table) {
  write_rows_as_json(out, table.n_max(), [&](int n, int k) { return table.count(n, k).str(); });
}

}  // namespace necklace
