#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace subord::cli {

/// Everything a run depends on. A run is a pure function of this struct.
struct RunConfig {
  std::string command;
  double grid_L = 40.0;
  long long grid_N = 16384;
  std::string out;
  std::string fixtures;

  double alpha = 1.0;
  double beta = 2.0;
  std::vector<double> eps{1.0, 0.5, 0.1};
  std::vector<double> p{1.0, 2.0, std::numeric_limits<double>::infinity()};

  std::string Q = "[[0,0],[1,0]]";
  std::string P1 = "[[0,0],[0,0],[1,0]]";
  std::string P2 = "[[1,0]]";
  double q = 2.0;
  double p1 = 2.0;
  double p2 = 2.0;

  std::string multiplier = "exp_decay:1";
  std::string m1 = "one_minus_gw:2";
  std::string m2 = "one_minus_gw:1";
  std::optional<double> tolerance;
};

enum ExitCode { pass = 0, hypothesis = 1, numerical = 2, invalid_config = 3 };

/// Parses argv (subcommand first) and runs it. JSON goes to --out or `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Applies the keys of a JSON config object on top of `config`; throws
/// std::invalid_argument on unknown keys or wrong types.
void apply_json_config(RunConfig& config, const std::string& json_text);

std::string default_fixture_path();

}  // namespace subord::cli
