#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "necklace/core.hpp"
#include "necklace/exactdist.hpp"
#include "necklace/rng.hpp"

namespace necklace {

// Recorded in every SimSummary so results stay attributable to the exact
// generator that produced them.
inline constexpr const char* kGeneratorName = "xoshiro256** (splitmix64 substreams)";

struct SimConfig {
  int n = 2;
  std::uint64_t replications = 1;
  std::uint64_t seed = 0;
  // When set, each replicate simulates the full bead sequence instead of
  // the count-only fast path. Both paths draw one uniform gap per
  // insertion and realize the same law; the fast path replaces the
  // necklace with the pair (size, whites), using the fact that a valid
  // size-m necklace with k whites has exactly m - 2k white-accepting gaps.
  bool track_beads = false;
};

struct SimSummary {
  int n = 0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::map<int, std::uint64_t> histogram;  // white count -> occurrences
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;  // unbiased; defined as 0 for replications == 1
};

// One full process run: n - 2 uniformly chosen insertions from the start
// necklace. Every construction process is equally likely.
Necklace simulate_one(int n, Xoshiro256StarStar& rng);

// Fast path: same law, but only the white count is tracked.
int simulate_white_count(int n, Xoshiro256StarStar& rng);

// Replicates [first, last) of the configured experiment, each on its own
// substream. run() covers [0, replications), splitting across workers
// (capped by the NECKLACE_THREADS environment variable); the result is
// identical regardless of the worker count.
SimSummary run_range(const SimConfig& config, std::uint64_t first, std::uint64_t last);
SimSummary run(const SimConfig& config);

// Additive combination of summaries from disjoint replicate ranges of the
// same experiment; moments are recomputed from the merged histogram.
SimSummary merge(const SimSummary& a, const SimSummary& b);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
};

// Pearson goodness-of-fit of the histogram against the exact law at the
// summary's n. Cells are merged inward from both support tails until each
// retained cell expects at least 5 observations; fewer than two surviving
// cells is a DomainError (too few replications to test).
ChiSquareResult chi_square(const SimSummary& summary, const DistTable& table);

// Kolmogorov distance of the empirical CDF, standardized by the limit
// parameters n/3 and sqrt(2n/45), against the standard normal CDF.
double empirical_normal_distance(const SimSummary& summary);

// Histogram rows "k,count".
void write_csv(std::ostream& out, const SimSummary& summary);

}  // namespace necklace
