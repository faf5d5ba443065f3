#include "necklace/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>
#include <vector>

#include "necklace/errors.hpp"
#include "necklace/stats.hpp"

namespace necklace {

namespace {

void check_config(const SimConfig& config) {
  if (config.n < 2) throw UsageError("simulation needs n >= 2");
  if (config.replications < 1) throw UsageError("simulation needs at least one replication");
}

// Exact histogram moments: integer sums, then one rational division each.
void fill_moments(SimSummary& s) {
  BigInt sum = 0;
  BigInt sum_sq = 0;
  for (const auto& [k, count] : s.histogram) {
    sum += BigInt(k) * count;
    sum_sq += BigInt(k) * k * count;
  }
  const BigInt r(s.replications);
  s.empirical_mean = to_double(Rational(sum, r));
  if (s.replications > 1) {
    const Rational var = (Rational(sum_sq) - Rational(sum * sum, r)) / Rational(r - 1);
    s.empirical_variance = to_double(var);
  } else {
    s.empirical_variance = 0.0;
  }
}

unsigned worker_count(std::uint64_t replications) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("NECKLACE_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) workers = static_cast<unsigned>(std::min<long>(parsed, 256));
  }
  // No point waking a worker for less than a few thousand replicates.
  const std::uint64_t max_useful = std::max<std::uint64_t>(1, replications / 4096);
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, max_useful));
}

}  // namespace

Necklace simulate_one(int n, Xoshiro256StarStar& rng) {
  if (n < 2) throw UsageError("simulation needs n >= 2");
  Necklace nk = start_necklace();
  while (nk.size() < n) {
    nk = insert_at(nk, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nk.size()))));
  }
  return nk;
}

int simulate_white_count(int n, Xoshiro256StarStar& rng) {
  if (n < 2) throw UsageError("simulation needs n >= 2");
  int whites = 1;
  for (int size = 2; size < n; ++size) {
    // m - 2k of the m gaps receive a white bead.
    const std::uint64_t white_gaps = static_cast<std::uint64_t>(size - 2 * whites);
    if (uniform_below(rng, static_cast<std::uint64_t>(size)) < white_gaps) ++whites;
  }
  return whites;
}

SimSummary run_range(const SimConfig& config, std::uint64_t first, std::uint64_t last) {
  check_config(config);
  if (first > last || last > config.replications) {
    throw UsageError("replicate range outside [0, replications]");
  }
  SimSummary s;
  s.n = config.n;
  s.replications = last - first;
  s.seed = config.seed;
  s.generator = kGeneratorName;
  for (std::uint64_t r = first; r < last; ++r) {
    Xoshiro256StarStar rng(config.seed, r);
    const int whites = config.track_beads ? white_count(simulate_one(config.n, rng))
                                          : simulate_white_count(config.n, rng);
    ++s.histogram[whites];
  }
  if (s.replications > 0) fill_moments(s);
  return s;
}

SimSummary run(const SimConfig& config) {
  check_config(config);
  const unsigned workers = worker_count(config.replications);
  if (workers <= 1) return run_range(config, 0, config.replications);

  std::vector<SimSummary> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = config.replications / workers;
  const std::uint64_t extra = config.replications % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    threads.emplace_back(
        [&, w, begin, end]() { parts[w] = run_range(config, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();

  SimSummary total = std::move(parts.front());
  for (unsigned w = 1; w < workers; ++w) total = merge(total, parts[w]);
  return total;
}

SimSummary merge(const SimSummary& a, const SimSummary& b) {
  if (a.n != b.n || a.seed != b.seed || a.generator != b.generator) {
    throw UsageError("cannot merge summaries from different experiments");
  }
  SimSummary s = a;
  s.replications += b.replications;
  for (const auto& [k, count] : b.histogram) s.histogram[k] += count;
  fill_moments(s);
  return s;
}

ChiSquareResult chi_square(const SimSummary& summary, const DistTable& table) {
  if (summary.n > table.n_max()) throw UsageError("summary n outside table range");
  if (summary.replications == 0) throw UsageError("empty summary");
  const int kmax = summary.n / 2;
  for (const auto& [k, count] : summary.histogram) {
    if (count > 0 && (k < 1 || k > kmax)) {
      throw UsageError("histogram key k=" + std::to_string(k) +
                       " outside the support of the reference law");
    }
  }
  struct Cell {
    double expected;
    double observed;
  };
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(kmax));
  const double reps = static_cast<double>(summary.replications);
  for (int k = 1; k <= kmax; ++k) {
    const auto it = summary.histogram.find(k);
    const double observed = (it == summary.histogram.end()) ? 0.0 : static_cast<double>(it->second);
    cells.push_back({reps * to_double(table.prob(summary.n, k)), observed});
  }
  // Merge inward from both tails until every retained cell expects >= 5.
  while (cells.size() > 1 && cells.front().expected < 5.0) {
    cells[1].expected += cells[0].expected;
    cells[1].observed += cells[0].observed;
    cells.erase(cells.begin());
  }
  while (cells.size() > 1 && cells.back().expected < 5.0) {
    cells[cells.size() - 2].expected += cells.back().expected;
    cells[cells.size() - 2].observed += cells.back().observed;
    cells.pop_back();
  }
  if (cells.size() < 2 || cells.front().expected < 5.0 || cells.back().expected < 5.0) {
    throw DomainError("too few replications for a chi-square test against this law");
  }
  ChiSquareResult result;
  for (const Cell& c : cells) {
    const double diff = c.observed - c.expected;
    result.statistic += diff * diff / c.expected;
  }
  result.dof = static_cast<int>(cells.size()) - 1;
  return result;
}

double empirical_normal_distance(const SimSummary& summary) {
  if (summary.n < 6) throw DomainError("normal distance needs n >= 6");
  if (summary.replications == 0) throw UsageError("empty summary");
  const double sigma = std::sqrt(2.0 * summary.n / 45.0);
  const double mu = summary.n / 3.0;
  const double reps = static_cast<double>(summary.replications);
  double dist = 0.0;
  std::uint64_t cumulative = 0;
  for (const auto& [k, count] : summary.histogram) {
    const double x = (k - mu) / sigma;
    const double phi = normal_cdf(x);
    const double below = static_cast<double>(cumulative) / reps;
    cumulative += count;
    const double at = static_cast<double>(cumulative) / reps;
    dist = std::max({dist, std::abs(below - phi), std::abs(at - phi)});
  }
  return dist;
}

void write_csv(std::ostream& out, const SimSummary& summary) {
  out << "k,count\n";
  for (const auto& [k, count] : summary.histogram) out << k << ',' << count << '\n';
}

}  // namespace necklace
