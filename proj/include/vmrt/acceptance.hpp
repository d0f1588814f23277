#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace vmrt {

/// Outcome of one acceptance criterion. `detail` holds only seed-determined
/// values; `seconds` is wall time and is never serialized by the CLI.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  nlohmann::ordered_json detail;
  double seconds = 0;
};

/// Criteria 1..7 of the acceptance suite, each driven by its own sub-stream
/// of `seed`. Criterion 8 (repeatability of the whole report) needs two runs
/// and lives with the callers.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace vmrt
