#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vmrt::cli {

enum class Command { EcoCert, Eqs, EcoLine, Converse, Count, Variation, Selftest };

struct RunConfig {
  Command command = Command::Selftest;
  std::string f_path;                  // --f
  std::vector<std::string> b_paths;    // --b FILE1,FILE2,... (converse)
  std::optional<std::string> point;    // --point "y1,...,yn"
  std::optional<std::string> dir;      // --dir "z1,...,zn"
  std::optional<std::string> coeffs;   // --coeffs "a1,...,a2m"
  std::optional<std::string> family;   // --family m2|mge3
  int n = 0;
  int m = 0;
  std::string b = "1";                 // family parameters, rationals
  std::string c = "1";
  std::optional<std::uint64_t> seed;
  bool json = false;
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // stdout
  std::string err;  // stderr
};

/// Executes one command. Exit status: 0 success, 1 unparseable input,
/// 2 precondition failure (with an error record), 3 selftest ran but a
/// criterion failed. Never throws for input errors.
RunResult run(const RunConfig& config);

}  // namespace vmrt::cli
