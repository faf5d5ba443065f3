#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef NECKLACE_CLI_PATH
#error "NECKLACE_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stderr folded into the captured stream so diagnostics
// show up in test failure logs.
CliResult run_cli(const std::string& args) {
  const std::string command = std::string(NECKLACE_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = (status >= 256) ? status / 256 : status;  // WEXITSTATUS without <sys/wait.h>
  return result;
}

}  // namespace

TEST_CASE("dist emits exact rationals in both formats") {
  const CliResult csv = run_cli("dist --n-max 4 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("# format_version=1 command=dist n_max=4") != std::string::npos);
  CHECK(csv.output.find("n,k,value") != std::string::npos);
  CHECK(csv.output.find("4,1,2/3") != std::string::npos);
  CHECK(csv.output.find("4,2,1/3") != std::string::npos);

  const CliResult js = run_cli("dist --n-max 2 --format json");
  CHECK(js.exit_code == 0);
  const json env = json::parse(js.output);
  CHECK(env["format_version"] == "1");
  CHECK(env["command"] == "dist");
  CHECK(env["parameters"]["n_max"] == 2);
  REQUIRE(env["payload"].size() == 1);
  CHECK(env["payload"][0] == json({{"n", 2}, {"k", 1}, {"value", "1"}}));

  // byte stability: parse and re-dump reproduces the emission
  CHECK(env.dump(2) + "\n" == js.output);
  CHECK(run_cli("dist --n-max 2 --format json").output == js.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("dist --n-max 1").exit_code == 2);
  CHECK(run_cli("simulate --n 4 --reps 0").exit_code == 2);
  CHECK(run_cli("dist --bogus-flag 3").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("moments rows carry the closed forms") {
  const CliResult r = run_cli("moments --n-max 6 --format json");
  CHECK(r.exit_code == 0);
  const json env = json::parse(r.output);
  bool found_white = false;
  bool found_black = false;
  for (const auto& row : env["payload"]) {
    if (row["n"] == 6 && row["color"] == "white") {
      CHECK(row["mean"] == "2");
      CHECK(row["variance"] == "4/15");
      found_white = true;
    }
    if (row["n"] == 6 && row["color"] == "black") {
      CHECK(row["mean"] == "4");
      CHECK(row["variance"] == "4/15");
      found_black = true;
    }
    if (row["n"] == 2) CHECK(row["variance"] == "0");
  }
  CHECK(found_white);
  CHECK(found_black);
}

TEST_CASE("count cross-checks enumeration when asked") {
  const CliResult r = run_cli("count --n-max 10 --with-bruteforce-up-to 8 --format json");
  CHECK(r.exit_code == 0);
  const json env = json::parse(r.output);
  bool found4 = false;
  for (const auto& row : env["payload"]) {
    if (row["n"] == 4) {
      CHECK(row["exact_count"] == "2");
      CHECK(row["bruteforce"] == "2");
      found4 = true;
    }
    if (row["n"] == 2) CHECK(row["exact_count"] == "1");
    if (row["n"] == 10) CHECK(!row.contains("bruteforce"));
  }
  CHECK(found4);
}

TEST_CASE("simulate is byte-reproducible and honors --check") {
  const std::string args = "simulate --n 4 --reps 20000 --seed 7 --check --format json";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json env = json::parse(a.output);
  const json& payload = env["payload"];
  CHECK(payload["n"] == 4);
  CHECK(payload["replications"] == 20000);
  CHECK(payload["seed"] == 7);
  CHECK(payload["generator"] == "xoshiro256** (splitmix64 substreams)");
  CHECK(payload.contains("chi_square"));
  CHECK(payload["chi_square_dof"] == 1);
  std::uint64_t total = 0;
  for (const auto& [k, count] : payload["histogram"].items()) {
    total += count.get<std::uint64_t>();
  }
  CHECK(total == 20000);
}

TEST_CASE("eval-gf evaluates the closed form") {
  const CliResult r = run_cli("eval-gf --z 0.5 --u 1.0");
  CHECK(r.exit_code == 0);
  const json env = json::parse(r.output);
  CHECK(env["payload"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(env["payload"]["exp_form"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(run_cli("eval-gf --z 0.7 --u 0.5").exit_code == 3);
  CHECK(run_cli("eval-gf --z 0.3 --u 0").exit_code == 3);
}
