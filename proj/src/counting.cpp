#include "necklace/counting.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <ostream>
#include <string>

#include "necklace/errors.hpp"
#include "necklace/series.hpp"

namespace necklace {

namespace {

// 50 decimal digits: |exact - phi^n/n| cancels ~n/2 leading digits at
// n = 200, which 64-bit floats cannot survive.
using Real50 = boost::multiprecision::cpp_bin_float_50;

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo) throw UsageError(std::string(what) + " needs n >= " + std::to_string(lo));
  if (n > hi) {
    throw ResourceError(std::string(what) + " guard: n=" + std::to_string(n) + " exceeds " +
                        std::to_string(hi));
  }
}

}  // namespace

std::uint64_t totient(std::uint64_t k) {
  if (k < 1) throw UsageError("totient needs k >= 1");
  std::uint64_t result = k;
  std::uint64_t m = k;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> necklace_count_coeffs(int n_max) {
  if (n_max < 2) throw UsageError("necklace_count_coeffs needs n_max >= 2");
  const int order = n_max;
  const TruncSeries one_minus_z(order, {Rational(1), Rational(-1)});
  const TruncSeries one_minus_z_z2(order, {Rational(1), Rational(-1), Rational(-1)});
  const TruncSeries base = series_log(one_minus_z) - series_log(one_minus_z_z2);
  TruncSeries total(order);
  for (int k = 1; k <= n_max; ++k) {
    const TruncSeries summand = compose_zk(base, k) * Rational(totient(static_cast<std::uint64_t>(k)), k);
    for (int m = 0; m < k; ++m) {
      if (summand.coeff(m) != 0) {
        throw ConsistencyError("k=" + std::to_string(k) + " summand reaches below z^k");
      }
    }
    total = total + summand;
  }
  std::vector<BigInt> counts(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    const Rational& c = total.coeff(m);
    if (denominator(c) != 1 || c < 0) {
      throw ConsistencyError("coefficient of z^" + std::to_string(m) +
                             " in N(z) is not a nonnegative integer: " + format_rational(c));
    }
    counts[static_cast<std::size_t>(m)] = numerator(c);
  }
  return counts;
}

std::set<Necklace> enumerate_valid(int n) {
  check_range(n, 2, 24, "enumerate_valid");
  std::set<Necklace> out;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      std::vector<BeadColor> beads;
      beads.reserve(static_cast<std::size_t>(n));
      for (const int p : parts) {
        beads.push_back(BeadColor::White);
        for (int i = 1; i < p; ++i) beads.push_back(BeadColor::Black);
      }
      out.insert(canonical_form(Necklace(std::move(beads))));
      return;
    }
    for (int p = 2; p <= remaining; ++p) {
      if (remaining - p == 1) continue;  // a leftover of 1 can never become a part
      parts.push_back(p);
      extend(remaining - p);
      parts.pop_back();
    }
  };
  extend(n);
  return out;
}

std::set<Necklace> enumerate_valid_bruteforce(int n) {
  check_range(n, 2, 20, "enumerate_valid_bruteforce");
  std::set<Necklace> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<BeadColor> beads(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      beads[static_cast<std::size_t>(i)] =
          (bits >> i) & 1u ? BeadColor::White : BeadColor::Black;
    }
    Necklace nk(std::move(beads));
    if (is_valid(nk)) out.insert(canonical_form(nk));
  }
  return out;
}

std::set<Necklace> reachable(int n) {
  check_range(n, 2, 14, "reachable");
  std::set<Necklace> level{canonical_form(start_necklace())};
  for (int size = 2; size < n; ++size) {
    std::set<Necklace> next;
    for (const Necklace& nk : level) {
      for (int g = 0; g < nk.size(); ++g) next.insert(canonical_form(insert_at(nk, g)));
    }
    level = std::move(next);
  }
  return level;
}

BigInt process_count(int n) {
  if (n < 2) throw UsageError("process_count needs n >= 2");
  return factorial(n - 1);
}

std::map<int, BigInt> process_white_histogram(int n) {
  check_range(n, 2, 10, "process_white_histogram");
  std::map<int, BigInt> hist;
  std::function<void(const Necklace&)> walk = [&](const Necklace& nk) {
    if (nk.size() == n) {
      hist[white_count(nk)] += 1;
      return;
    }
    for (int g = 0; g < nk.size(); ++g) walk(insert_at(nk, g));
  };
  walk(start_necklace());
  return hist;
}

CountReport asymptotic_report(int n, const BigInt& exact) {
  if (n < 2) throw UsageError("asymptotic_report needs n >= 2");
  if (exact < 1) throw UsageError("exact count must be >= 1");
  const Real50 phi = (1 + sqrt(Real50(5))) / 2;
  const Real50 estimate = pow(phi, n) / n;
  const Real50 diff = abs(Real50(exact) - estimate);
  CountReport report;
  report.n = n;
  report.exact_count = exact;
  report.asymptotic_estimate = estimate.convert_to<double>();
  report.relative_error = (diff / Real50(exact)).convert_to<double>();
  report.normalized_error = (diff * n / pow(phi, Real50(n) / 2)).convert_to<double>();
  return report;
}

void write_csv(std::ostream& out, const std::vector<CountReport>& reports) {
  out << "n,exact_count,estimate,relative_error,normalized_error\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.precision(17);
  for (const CountReport& r : reports) {
    out << r.n << ',' << r.exact_count.str() << ',' << r.asymptotic_estimate << ','
        << r.relative_error << ',' << r.normalized_error << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace necklace
