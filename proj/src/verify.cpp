#include "necklace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "necklace/counting.hpp"
#include "necklace/errors.hpp"
#include "necklace/exactdist.hpp"
#include "necklace/montecarlo.hpp"
#include "necklace/stats.hpp"

namespace necklace {

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---- individual checks ----------------------------------------------------

void check_process_law(VerifyLevel level, std::string& detail) {
  const int n_top = (level == VerifyLevel::Quick) ? 7 : 9;
  const DistTable table(n_top);
  for (int n = 2; n <= n_top; ++n) {
    const auto hist = process_white_histogram(n);
    const BigInt total = process_count(n);
    for (int k = 1; k <= n / 2; ++k) {
      const auto it = hist.find(k);
      const BigInt observed = (it == hist.end()) ? BigInt(0) : it->second;
      require(Rational(observed, total) == table.prob(n, k),
              "process law mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  detail = "all (n-1)! processes up to n=" + std::to_string(n_top);
}

void check_moments(VerifyLevel level, std::string& detail) {
  const int n_top = (level == VerifyLevel::Quick) ? 60 : 200;
  const DistTable table(n_top);
  for (int n = 3; n <= n_top; ++n) {
    const MomentPair white = moments_white(n, table);
    const MomentPair black = moments_black(n, table);
    require(white.mean == Rational(n, 3), "white mean != n/3 at n=" + std::to_string(n));
    require(black.mean == Rational(2 * n, 3), "black mean != 2n/3 at n=" + std::to_string(n));
    if (n >= 6) {
      require(white.variance == Rational(2 * n, 45),
              "white variance != 2n/45 at n=" + std::to_string(n));
      require(black.variance == white.variance, "black variance != white variance");
    }
  }
  detail = "exact through n=" + std::to_string(n_top);
}

void check_triple_oracle(VerifyLevel level, std::string& detail) {
  const int n_top = (level == VerifyLevel::Quick) ? 24 : 60;
  const DistTable table(n_top);
  const std::vector<RPoly> via_r = r_to_pgf_all(n_top);
  for (int n = 2; n <= n_top; ++n) {
    const RPoly w = pgf(n);
    for (int k = 0; k <= std::max(w.degree(), n / 2); ++k) {
      require(w.coeff(k) == table.prob(n, k),
              "pgf vs table mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    require(via_r[static_cast<std::size_t>(n)] == w,
            "r-polynomial route disagrees with pgf at n=" + std::to_string(n));
  }
  detail = "pgf = table row = r-route for n <= " + std::to_string(n_top);
}

void check_pde(VerifyLevel level, std::string& detail) {
  const int order = (level == VerifyLevel::Quick) ? 16 : 60;
  require(pde_residual(order).is_zero(),
          "PDE residual does not vanish through z^" + std::to_string(order - 1));
  detail = "residual zero through z^" + std::to_string(order - 1);
}

void check_closed_form(VerifyLevel level, std::string& detail) {
  const int max_n = (level == VerifyLevel::Quick) ? 61 : 121;
  double worst_series = 0.0;
  double worst_forms = 0.0;
  for (const double z : {0.1, 0.2, 0.3}) {
    for (const double u : {0.25, 0.5, 0.75, 1.0}) {
      const double direct = closed_form_eval(z, u);
      const double exp_form = closed_form_eval_exp(z, u);
      const double series =
          to_double(truncated_W_eval(rational_from_double(z), rational_from_double(u), max_n));
      worst_series = std::max(worst_series, std::abs(direct - series));
      worst_forms = std::max(worst_forms, std::abs(direct - exp_form));
    }
  }
  require(worst_series <= 1e-9, "closed form vs series: " + fmt(worst_series));
  require(worst_forms <= 1e-12, "coth form vs exp form: " + fmt(worst_forms));
  detail = "series gap " + fmt(worst_series) + ", form gap " + fmt(worst_forms);
}

void check_counting(VerifyLevel level, std::string& detail) {
  const int n_series = (level == VerifyLevel::Quick) ? 14 : 18;
  const int n_bfs = (level == VerifyLevel::Quick) ? 10 : 12;
  const auto coeffs = necklace_count_coeffs(n_series);
  for (int n = 2; n <= n_series; ++n) {
    require(BigInt(enumerate_valid(n).size()) == coeffs[static_cast<std::size_t>(n)],
            "series count vs enumeration at n=" + std::to_string(n));
  }
  for (int n = 2; n <= n_bfs; ++n) {
    require(reachable(n) == enumerate_valid(n),
            "reachable set != valid set at n=" + std::to_string(n));
  }
  detail = "series=enumeration to n=" + std::to_string(n_series) + ", BFS to n=" +
           std::to_string(n_bfs);
}

void check_integer_table(VerifyLevel level, std::string& detail) {
  const int n_top = (level == VerifyLevel::Quick) ? 12 : 20;
  const DistTable dist(n_top);
  const ProcessCountTable counts(n_top);
  for (int n = 2; n <= n_top; ++n) {
    const BigInt total = process_count(n);
    BigInt sum = 0;
    for (int k = 1; k <= n / 2; ++k) {
      const BigInt& c = counts.count(n, k);
      require(Rational(c, total) == dist.prob(n, k),
              "c != w (n-1)! at n=" + std::to_string(n) + " k=" + std::to_string(k));
      sum += c;
    }
    require(sum == total, "row sum != (n-1)! at n=" + std::to_string(n));
  }
  detail = "c = w (n-1)! through n=" + std::to_string(n_top);
}

void check_asymptotic(VerifyLevel level, std::string& detail) {
  const int n_top = (level == VerifyLevel::Quick) ? 120 : 200;
  const int split = (n_top + 20) / 2;
  const auto coeffs = necklace_count_coeffs(n_top);
  double fitted = 0.0;
  double later = 0.0;
  for (int n = 20; n <= n_top; ++n) {
    const CountReport r = asymptotic_report(n, coeffs[static_cast<std::size_t>(n)]);
    require(std::isfinite(r.normalized_error), "normalized error not finite");
    if (n <= split) {
      fitted = std::max(fitted, r.normalized_error);
    } else {
      later = std::max(later, r.normalized_error);
    }
  }
  require(later <= 3.0 * fitted,
          "normalized error grows: " + fmt(later) + " vs fitted " + fmt(fitted));
  detail = "fitted C=" + fmt(fitted) + ", later max " + fmt(later);
}

void check_clt(VerifyLevel level, std::string& detail) {
  const std::vector<int> ns =
      (level == VerifyLevel::Quick) ? std::vector<int>{50, 200} : std::vector<int>{100, 400, 1600};
  std::vector<double> d;
  for (const int n : ns) d.push_back(normal_distance(process_count_row(n)));
  for (std::size_t i = 0; i < d.size(); ++i) {
    require(d[i] > 0.0, "distance not positive");
    if (i > 0) require(d[i] < d[i - 1], "distance not decreasing");
  }
  if (level == VerifyLevel::Full) {
    const double c = d[1] * std::sqrt(400.0);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const double scaled = d[i] * std::sqrt(static_cast<double>(ns[i]));
      require(scaled >= c / 3.0 && scaled <= 3.0 * c, "outside the n^{-1/2} envelope");
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < ns.size(); ++i) os << (i ? ", " : "") << "d(" << ns[i] << ")=" << fmt(d[i]);
  detail = os.str();
}

void check_mc_mean(VerifyLevel level, std::string& detail) {
  SimConfig config;
  config.n = 6;
  config.replications = (level == VerifyLevel::Quick) ? 100'000 : 1'000'000;
  config.seed = 424242;
  const SimSummary s = run(config);
  const double band = 3.0 * std::sqrt((2.0 * 6 / 45.0) / static_cast<double>(config.replications));
  require(std::abs(s.empirical_mean - 2.0) <= band,
          "mean " + fmt(s.empirical_mean) + " outside 3-sigma band " + fmt(band));
  detail = "mean " + fmt(s.empirical_mean) + " within +-" + fmt(band);
}

void check_mc_chi_square(VerifyLevel level, std::string& detail) {
  const int seeds = (level == VerifyLevel::Quick) ? 5 : 100;
  const int allowed_failures = 1;
  const std::uint64_t reps = (level == VerifyLevel::Quick) ? 100'000 : 1'000'000;
  const DistTable table(6);
  int below = 0;
  int dof = 0;
  for (int i = 0; i < seeds; ++i) {
    SimConfig config;
    config.n = 6;
    config.replications = reps;
    config.seed = 1000 + static_cast<std::uint64_t>(i);
    const ChiSquareResult r = chi_square(run(config), table);
    dof = r.dof;
    if (r.statistic < chi_square_quantile(0.999, r.dof)) ++below;
  }
  require(below >= seeds - allowed_failures,
          std::to_string(below) + "/" + std::to_string(seeds) + " below the 0.999 quantile");
  detail = std::to_string(below) + "/" + std::to_string(seeds) + " below q(0.999, dof=" +
           std::to_string(dof) + ")";
}

void check_mean_series_identity(VerifyLevel level, std::string& detail) {
  const int order = (level == VerifyLevel::Quick) ? 40 : 100;
  // sum_n E[W_n] z^{n-1} must equal z(z^2 - 3z + 3) / (3 (1-z)^2).
  const DistTable table(order + 1);
  TruncSeries means(order);
  for (int n = 2; n <= order + 1; ++n) {
    means.set_coeff(n - 1, moments_white(n, table).mean);
  }
  const TruncSeries numerator(order, {Rational(0), Rational(1), Rational(-1), Rational(1, 3)});
  const TruncSeries denominator(order, {Rational(1), Rational(-2), Rational(1)});
  const TruncSeries expected = numerator / denominator;
  require(means == expected, "mean generating function mismatch");
  detail = "mean series equals z(z^2-3z+3)/(3(1-z)^2) through z^" + std::to_string(order);
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream& out) {
  using Check = std::function<void(VerifyLevel, std::string&)>;
  const std::vector<std::pair<std::string, Check>> checks = {
      {"process_law", check_process_law},
      {"moments_exact", check_moments},
      {"triple_oracle", check_triple_oracle},
      {"mean_series_identity", check_mean_series_identity},
      {"pde_identity", check_pde},
      {"closed_form", check_closed_form},
      {"counting_oracles", check_counting},
      {"integer_table", check_integer_table},
      {"asymptotic_bound", check_asymptotic},
      {"clt_trend", check_clt},
      {"mc_mean", check_mc_mean},
      {"mc_chi_square", check_mc_chi_square},
  };
  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& [name, fn] : checks) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(level, result.detail);
      result.pass = true;
    } catch (const Failure& f) {
      result.pass = false;
      result.detail = f.message;
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    out << (result.pass ? "ok   " : "FAIL ") << result.name << "  (" << result.detail << ") ["
        << elapsed.count() << " ms]\n";
    out.flush();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace necklace
