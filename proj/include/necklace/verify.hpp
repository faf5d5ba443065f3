#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace necklace {

// The self-check battery behind `necklace verify`: every cross-check the
// project rests on, run end to end against the live build. Quick keeps
// all ranges small enough for a few seconds; Full runs the complete
// ranges (the large Monte Carlo calibration included) and takes on the
// order of a minute.
enum class VerifyLevel { Quick, Full };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs all checks, streaming one "ok"/"FAIL" line per check to `out` as
// results arrive. Never throws on a failed check; exceptions from a check
// are caught and reported as failures.
std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream& out);

}  // namespace necklace
