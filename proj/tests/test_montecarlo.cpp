#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "necklace/errors.hpp"
#include "necklace/montecarlo.hpp"
#include "necklace/stats.hpp"

using namespace necklace;

namespace {

SimConfig make_config(int n, std::uint64_t reps, std::uint64_t seed) {
  SimConfig c;
  c.n = n;
  c.replications = reps;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("single simulations respect the process law boundaries") {
  Xoshiro256StarStar rng(5);
  CHECK(simulate_one(2, rng) == start_necklace());
  for (int i = 0; i < 50; ++i) {
    const Necklace three = simulate_one(3, rng);
    CHECK(white_count(three) == 1);
    CHECK(three.size() == 3);
  }
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 20));
    const Necklace nk = simulate_one(n, rng);
    CHECK(is_valid(nk));
    const int whites = white_count(nk);
    CHECK(whites >= 1);
    CHECK(whites <= n / 2);
    Xoshiro256StarStar rng2(1234, static_cast<std::uint64_t>(i));
    const int fast = simulate_white_count(n, rng2);
    CHECK(fast >= 1);
    CHECK(fast <= n / 2);
  }
}

TEST_CASE("runs are reproducible and mergeable") {
  const SimConfig config = make_config(8, 20000, 77);
  const SimSummary a = run(config);
  const SimSummary b = run(config);
  CHECK(a.histogram == b.histogram);
  CHECK(a.empirical_mean == b.empirical_mean);
  CHECK(a.empirical_variance == b.empirical_variance);
  CHECK(a.generator == kGeneratorName);
  CHECK(a.replications == 20000);

  // disjoint substream ranges merge to the full run exactly
  const SimSummary left = run_range(config, 0, 9000);
  const SimSummary right = run_range(config, 9000, 20000);
  const SimSummary merged = merge(left, right);
  CHECK(merged.histogram == a.histogram);
  CHECK(merged.empirical_mean == a.empirical_mean);
  CHECK(merged.empirical_variance == a.empirical_variance);

  CHECK_THROWS_AS(merge(left, run(make_config(9, 100, 77))), UsageError);
  CHECK_THROWS_AS(run(make_config(1, 10, 0)), UsageError);
  CHECK_THROWS_AS(run(make_config(4, 0, 0)), UsageError);
  CHECK_THROWS_AS(run_range(config, 5, 3), UsageError);
}

TEST_CASE("worker count does not change the result") {
  const SimConfig config = make_config(12, 30000, 2024);
#if defined(_WIN32)
  const SimSummary a = run(config);
  const SimSummary b = run(config);
#else
  setenv("NECKLACE_THREADS", "1", 1);
  const SimSummary a = run(config);
  setenv("NECKLACE_THREADS", "7", 1);
  const SimSummary b = run(config);
  unsetenv("NECKLACE_THREADS");
#endif
  CHECK(a.histogram == b.histogram);
  CHECK(a.empirical_mean == b.empirical_mean);
}

TEST_CASE("histogram fractions sit inside binomial bands at n = 4..10") {
  const DistTable table(10);
  for (int n = 4; n <= 10; ++n) {
    const std::uint64_t reps = 1'000'000;
    const SimSummary s = run(make_config(n, reps, 31000 + static_cast<std::uint64_t>(n)));
    for (int k = 1; k <= n / 2; ++k) {
      const double p = to_double(table.prob(n, k));
      const double expected = p * static_cast<double>(reps);
      const double sigma = std::sqrt(static_cast<double>(reps) * p * (1.0 - p));
      const auto it = s.histogram.find(k);
      const double observed = it == s.histogram.end() ? 0.0 : static_cast<double>(it->second);
      CHECK(std::abs(observed - expected) <= 4.0 * sigma);
    }
  }
}

TEST_CASE("bead-sequence path and count-only path realize the same law") {
  const DistTable table(7);
  SimConfig config = make_config(7, 200000, 5150);
  config.track_beads = true;
  const ChiSquareResult slow = chi_square(run(config), table);
  config.track_beads = false;
  config.seed = 5151;
  const ChiSquareResult fast = chi_square(run(config), table);
  const double q999_slow = chi_square_quantile(0.999, slow.dof);
  const double q999_fast = chi_square_quantile(0.999, fast.dof);
  CHECK(slow.statistic < q999_slow);
  CHECK(fast.statistic < q999_fast);
}

TEST_CASE("empirical mean at n = 6 lands in the 3-sigma band") {
  const std::uint64_t reps = 100'000;
  const SimSummary s = run(make_config(6, reps, 8080));
  const double band = 3.0 * std::sqrt((4.0 / 15.0) / static_cast<double>(reps));
  CHECK(std::abs(s.empirical_mean - 2.0) <= band);
}

TEST_CASE("chi-square statistic is zero on an exactly proportional histogram") {
  const DistTable table(6);
  SimSummary s;
  s.n = 6;
  s.seed = 0;
  s.generator = kGeneratorName;
  s.replications = 150000;
  s.histogram = {{1, 20000}, {2, 110000}, {3, 20000}};  // 150000 * {2/15, 11/15, 2/15}
  const ChiSquareResult r = chi_square(s, table);
  CHECK(r.statistic == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.dof == 2);
}

TEST_CASE("chi-square rejects data tested against the wrong law") {
  const DistTable table(11);
  SimSummary s = run(make_config(10, 100000, 99));
  s.n = 11;  // test the n=10 sample against the n=11 row
  const ChiSquareResult r = chi_square(s, table);
  CHECK(r.statistic > chi_square_quantile(0.999, r.dof));
}

TEST_CASE("chi-square calibration across seeds") {
  const DistTable table(6);
  int below = 0;
  const int seeds = 20;
  for (int i = 0; i < seeds; ++i) {
    const ChiSquareResult r =
        chi_square(run(make_config(6, 100000, 7000 + static_cast<std::uint64_t>(i))), table);
    if (r.statistic < chi_square_quantile(0.999, r.dof)) ++below;
  }
  CHECK(below >= seeds - 2);
}

TEST_CASE("chi-square needs enough data after merging") {
  const DistTable table(12);
  const SimSummary s = run(make_config(12, 8, 4));
  CHECK_THROWS_AS(chi_square(s, table), DomainError);
}

TEST_CASE("empirical normal distance") {
  const SimSummary s6 = run(make_config(6, 100000, 321));
  const double d6 = empirical_normal_distance(s6);
  CHECK(d6 <= 1.0);
  CHECK(d6 > 0.05);  // the n = 6 lattice gap never closes

  const SimSummary s50 = run(make_config(50, 30000, 322));
  const SimSummary s800 = run(make_config(800, 30000, 323));
  CHECK(empirical_normal_distance(s800) < empirical_normal_distance(s50));

  CHECK_THROWS_AS(empirical_normal_distance(run(make_config(4, 100, 1))), DomainError);
}

TEST_CASE("summary csv") {
  SimSummary s;
  s.histogram = {{1, 3}, {2, 5}};
  std::ostringstream out;
  write_csv(out, s);
  CHECK(out.str() == "k,count\n1,3\n2,5\n");
}
