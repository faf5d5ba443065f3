// Command-line front end: every computation in the library behind one
// binary with machine-readable output.
//
// Output contract: results go to stdout, diagnostics to stderr. JSON
// output is a fixed envelope {format_version, command, parameters,
// payload}; CSV output starts with a '#' envelope comment followed by a
// header row. Exact rationals are always emitted as "num" or "num/den"
// strings, never as floats.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 consistency
// failure, 5 resource guard, 1 anything else.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "necklace/counting.hpp"
#include "necklace/errors.hpp"
#include "necklace/exactdist.hpp"
#include "necklace/montecarlo.hpp"
#include "necklace/verify.hpp"

namespace {

using nlohmann::json;
using namespace necklace;

constexpr const char* kFormatVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kUsage = 2,
  kDomain = 3,
  kConsistency = 4,
  kResource = 5,
};

json envelope(const std::string& command, json parameters, json payload) {
  json env;
  env["format_version"] = kFormatVersion;
  env["command"] = command;
  env["parameters"] = std::move(parameters);
  env["payload"] = std::move(payload);
  return env;
}

void emit_json(const json& env) { std::cout << env.dump(2) << '\n'; }

std::string csv_envelope_line(const std::string& command, const json& parameters) {
  std::string line = "# format_version=";
  line += kFormatVersion;
  line += " command=" + command;
  for (const auto& [key, value] : parameters.items()) {
    line += ' ' + key + '=';
    line += value.is_string() ? value.get<std::string>() : value.dump();
  }
  return line;
}

int cmd_dist(int n_max, const std::string& format) {
  const DistTable table(n_max);
  const json parameters = {{"n_max", n_max}};
  if (format == "csv") {
    std::cout << csv_envelope_line("dist", parameters) << '\n';
    write_csv(std::cout, table);
    return kOk;
  }
  json payload = json::array();
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& [k, w] : table.row(n)) {
      payload.push_back({{"n", n}, {"k", k}, {"value", format_rational(w)}});
    }
  }
  emit_json(envelope("dist", parameters, std::move(payload)));
  return kOk;
}

int cmd_moments(int n_max, const std::string& format) {
  const DistTable table(n_max);
  const json parameters = {{"n_max", n_max}};
  if (format == "csv") {
    std::cout << csv_envelope_line("moments", parameters) << '\n';
    std::cout << "n,color,mean,variance\n";
    for (int n = 2; n <= n_max; ++n) {
      const MomentPair white = moments_white(n, table);
      const MomentPair black = moments_black(n, table);
      std::cout << n << ",white," << format_rational(white.mean) << ','
                << format_rational(white.variance) << '\n';
      std::cout << n << ",black," << format_rational(black.mean) << ','
                << format_rational(black.variance) << '\n';
    }
    return kOk;
  }
  json payload = json::array();
  for (int n = 2; n <= n_max; ++n) {
    const MomentPair white = moments_white(n, table);
    const MomentPair black = moments_black(n, table);
    payload.push_back({{"n", n},
                       {"color", "white"},
                       {"mean", format_rational(white.mean)},
                       {"variance", format_rational(white.variance)}});
    payload.push_back({{"n", n},
                       {"color", "black"},
                       {"mean", format_rational(black.mean)},
                       {"variance", format_rational(black.variance)}});
  }
  emit_json(envelope("moments", parameters, std::move(payload)));
  return kOk;
}

int cmd_count(int n_max, int bruteforce_up_to, const std::string& format) {
  const auto coeffs = necklace_count_coeffs(n_max);
  json parameters = {{"n_max", n_max}};
  if (bruteforce_up_to > 0) parameters["with_bruteforce_up_to"] = bruteforce_up_to;

  std::vector<CountReport> reports;
  std::vector<std::string> bruteforce(static_cast<std::size_t>(n_max) + 1);
  for (int n = 2; n <= n_max; ++n) {
    reports.push_back(asymptotic_report(n, coeffs[static_cast<std::size_t>(n)]));
    if (n <= bruteforce_up_to) {
      const BigInt enumerated(enumerate_valid(n).size());
      if (enumerated != coeffs[static_cast<std::size_t>(n)]) {
        throw ConsistencyError("series count and brute-force enumeration disagree at n=" +
                               std::to_string(n));
      }
      bruteforce[static_cast<std::size_t>(n)] = enumerated.str();
    }
  }
  if (format == "csv") {
    std::cout << csv_envelope_line("count", parameters) << '\n';
    std::cout << "n,exact_count,estimate,relative_error,normalized_error,bruteforce\n";
    std::ostringstream row;
    row.precision(17);
    for (const CountReport& r : reports) {
      row.str("");
      row << r.n << ',' << r.exact_count.str() << ',' << r.asymptotic_estimate << ','
          << r.relative_error << ',' << r.normalized_error << ','
          << bruteforce[static_cast<std::size_t>(r.n)];
      std::cout << row.str() << '\n';
    }
    return kOk;
  }
  json payload = json::array();
  for (const CountReport& r : reports) {
    json row = {{"n", r.n},
                {"exact_count", r.exact_count.str()},
                {"estimate", r.asymptotic_estimate},
                {"relative_error", r.relative_error},
                {"normalized_error", r.normalized_error}};
    if (!bruteforce[static_cast<std::size_t>(r.n)].empty()) {
      row["bruteforce"] = bruteforce[static_cast<std::size_t>(r.n)];
    }
    payload.push_back(std::move(row));
  }
  emit_json(envelope("count", parameters, std::move(payload)));
  return kOk;
}

int cmd_simulate(int n, std::uint64_t reps, std::uint64_t seed, bool check, bool track_beads,
                 const std::string& format) {
  SimConfig config;
  config.n = n;
  config.replications = reps;
  config.seed = seed;
  config.track_beads = track_beads;
  const SimSummary summary = run(config);

  json parameters = {{"n", n}, {"reps", reps}, {"seed", seed}};
  if (track_beads) parameters["track_beads"] = true;
  if (check) parameters["check"] = true;

  json histogram = json::object();
  for (const auto& [k, count] : summary.histogram) histogram[std::to_string(k)] = count;
  json payload = {{"n", summary.n},
                  {"replications", summary.replications},
                  {"seed", summary.seed},
                  {"generator", summary.generator},
                  {"histogram", std::move(histogram)},
                  {"mean", summary.empirical_mean},
                  {"variance", summary.empirical_variance}};
  if (check) {
    const DistTable table(n);
    const ChiSquareResult r = chi_square(summary, table);
    payload["chi_square"] = r.statistic;
    payload["chi_square_dof"] = r.dof;
  }
  if (format == "csv") {
    std::cout << csv_envelope_line("simulate", parameters) << '\n';
    write_csv(std::cout, summary);
    std::ostringstream stats;
    stats.precision(17);
    stats << "# generator=" << summary.generator << " mean=" << summary.empirical_mean
          << " variance=" << summary.empirical_variance;
    if (check) {
      stats << " chi_square=" << payload["chi_square"].get<double>()
            << " dof=" << payload["chi_square_dof"].get<int>();
    }
    std::cout << stats.str() << '\n';
    return kOk;
  }
  emit_json(envelope("simulate", parameters, std::move(payload)));
  return kOk;
}

int cmd_eval_gf(double z, double u, int fallback_order, const std::string& format) {
  const double value = closed_form_eval(z, u, fallback_order);
  const double exp_form = closed_form_eval_exp(z, u);
  const json parameters = {{"z", z}, {"u", u}, {"fallback_order", fallback_order}};
  if (format == "csv") {
    std::cout << csv_envelope_line("eval-gf", parameters) << '\n';
    std::cout << "z,u,value,exp_form\n";
    std::ostringstream row;
    row.precision(17);
    row << z << ',' << u << ',' << value << ',' << exp_form;
    std::cout << row.str() << '\n';
    return kOk;
  }
  emit_json(envelope("eval-gf", parameters, json{{"z", z}, {"u", u}, {"value", value}, {"exp_form", exp_form}}));
  return kOk;
}

int cmd_verify(const std::string& level) {
  const VerifyLevel lvl = (level == "full") ? VerifyLevel::Full : VerifyLevel::Quick;
  const auto results = run_verification(lvl, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED")
            << " (" << results.size() << " run, level " << level << ")\n";
  return failed == 0 ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and empirical laboratory for the two-color necklace insertion process"};
  app.require_subcommand(1);

  std::string format = "json";

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  int n_max = 10;
  auto* dist = app.add_subcommand("dist", "exact distribution of the white-bead count");
  dist->add_option("--n-max", n_max, "largest necklace size")->required()->check(CLI::Range(2, 100000));
  add_format(dist);

  int moments_n_max = 10;
  auto* moments = app.add_subcommand("moments", "exact mean and variance, white and black");
  moments->add_option("--n-max", moments_n_max, "largest necklace size")
      ->required()
      ->check(CLI::Range(2, 100000));
  add_format(moments);

  int count_n_max = 20;
  int bruteforce_up_to = 0;
  auto* count = app.add_subcommand("count", "number of distinct necklaces per size");
  count->add_option("--n-max", count_n_max, "largest necklace size")
      ->required()
      ->check(CLI::Range(2, 100000));
  count->add_option("--with-bruteforce-up-to", bruteforce_up_to,
                    "cross-check against enumeration up to this size")
      ->check(CLI::Range(0, 24));
  add_format(count);

  int sim_n = 6;
  std::uint64_t reps = 10000;
  std::uint64_t seed = 0;
  bool check = false;
  bool track_beads = false;
  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo runs of the process");
  simulate->add_option("--n", sim_n, "necklace size")->required()->check(CLI::Range(2, 100000000));
  simulate->add_option("--reps", reps, "number of replications")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100'000'000'000}));
  simulate->add_option("--seed", seed, "64-bit master seed");
  simulate->add_flag("--check", check, "chi-square the histogram against the exact law");
  simulate->add_flag("--track-beads", track_beads, "simulate full bead sequences");
  add_format(simulate);

  double z = 0.3;
  double u = 0.5;
  int fallback_order = 8;
  auto* eval = app.add_subcommand("eval-gf", "evaluate the closed-form generating function");
  eval->add_option("--z", z, "z in (0, 0.5]")->required();
  eval->add_option("--u", u, "u in (0, 1]")->required();
  eval->add_option("--fallback-order", fallback_order, "series order used near u = 1");
  add_format(eval);

  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "run the cross-check battery");
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (dist->parsed()) return cmd_dist(n_max, format);
    if (moments->parsed()) return cmd_moments(moments_n_max, format);
    if (count->parsed()) return cmd_count(count_n_max, bruteforce_up_to, format);
    if (simulate->parsed()) return cmd_simulate(sim_n, reps, seed, check, track_beads, format);
    if (eval->parsed()) return cmd_eval_gf(z, u, fallback_order, format);
    if (verify->parsed()) return cmd_verify(level);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::out_of_range& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kUsage;
}
