#include <doctest.h>

#include <cmath>

#include "necklace/errors.hpp"
#include "necklace/rng.hpp"
#include "necklace/stats.hpp"

using namespace necklace;

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(-1.2815515655446004) == doctest::Approx(0.10).epsilon(1e-12));
  for (const double x : {0.3, 1.0, 2.5, 4.0}) {
    CHECK(normal_cdf(-x) == doctest::Approx(1.0 - normal_cdf(x)).epsilon(1e-14));
  }
}

TEST_CASE("chi-square cdf against published table points") {
  CHECK(chi_square_cdf(3.841458820694124, 1) == doctest::Approx(0.95).epsilon(1e-10));
  CHECK(chi_square_cdf(5.991464547107979, 2) == doctest::Approx(0.95).epsilon(1e-10));
  CHECK(chi_square_cdf(16.918977604620448, 9) == doctest::Approx(0.95).epsilon(1e-10));
  // dof = 2 has the closed form 1 - exp(-x/2)
  for (const double x : {0.5, 2.0, 7.0, 20.0}) {
    CHECK(chi_square_cdf(x, 2) == doctest::Approx(1.0 - std::exp(-x / 2.0)).epsilon(1e-12));
  }
  CHECK(chi_square_cdf(-1.0, 3) == 0.0);
  CHECK_THROWS_AS(chi_square_cdf(1.0, 0), DomainError);
}

TEST_CASE("chi-square quantile") {
  // dof = 2: quantile(p) = -2 log(1-p)
  CHECK(chi_square_quantile(0.999, 2) == doctest::Approx(13.815510557964274).epsilon(1e-8));
  CHECK(chi_square_quantile(0.95, 2) == doctest::Approx(5.991464547107979).epsilon(1e-8));
  for (const int dof : {1, 2, 5, 10}) {
    for (const double p : {0.1, 0.5, 0.95, 0.999}) {
      CHECK(chi_square_cdf(chi_square_quantile(p, dof), dof) == doctest::Approx(p).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(chi_square_quantile(0.0, 2), DomainError);
  CHECK_THROWS_AS(chi_square_quantile(1.0, 2), DomainError);
}

TEST_CASE("splitmix64 matches the reference stream") {
  CHECK(splitmix64_at(0, 0) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64_at(0, 1) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64_at(0, 2) == 0x06C45D188009454FULL);
  CHECK(splitmix64_at(42, 0) == 0xBDD732262FEB6E95ULL);
  // random access equals sequential access by construction of the Weyl
  // stream; spot-check a far index against a local sequential walk
  std::uint64_t state = 123456789;
  std::uint64_t out = 0;
  for (int i = 0; i < 1000; ++i) out = splitmix64_at(123456789, static_cast<std::uint64_t>(i));
  CHECK(out == splitmix64_at(state, 999));
}

TEST_CASE("xoshiro substreams are deterministic and disjointly seeded") {
  Xoshiro256StarStar a(7, 3);
  Xoshiro256StarStar b(7, 3);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());

  Xoshiro256StarStar c(7, 4);
  bool all_equal = true;
  Xoshiro256StarStar a2(7, 3);
  for (int i = 0; i < 100; ++i) all_equal = all_equal && (a2() == c());
  CHECK_FALSE(all_equal);
}

TEST_CASE("uniform_below is exact on tiny bounds and unbiased in aggregate") {
  Xoshiro256StarStar rng(99);
  for (int i = 0; i < 100; ++i) CHECK(uniform_below(rng, 1) == 0);

  // bound 3: counts of each value over 60000 draws within 5 sigma
  int counts[3] = {0, 0, 0};
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[uniform_below(rng, 3)];
  const double expected = draws / 3.0;
  const double sigma = std::sqrt(draws * (1.0 / 3.0) * (2.0 / 3.0));
  for (const int c : counts) CHECK(std::abs(c - expected) < 5.0 * sigma);

  // huge bound exercises the rejection threshold path
  const std::uint64_t bound = 0xF000000000000000ULL;
  for (int i = 0; i < 100; ++i) CHECK(uniform_below(rng, bound) < bound);
}
