#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entrothresh/entrothresh.h"

namespace entrothresh::cli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitInfeasible = 3,
  kExitOutput = 4,
};

enum class Mode { Single, Sweep, Compare };

struct RunConfig {
  std::string input_path;
  Mode mode = Mode::Single;
  std::optional<et_entropy_kind> entropy;
  std::optional<double> index;
  std::vector<double> grid;
  int connectivity = 4;
  std::optional<std::string> output_image_path;
  std::optional<std::string> report_path;
  int jump_tolerance = 20;
  bool allow_extended_index = false;
};

// Parses the command line into a RunConfig. On failure prints the problem to
// `err` and returns the exit status to use (kExitOk for --help).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_status = kExitOk;
};
ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out,
                        std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace entrothresh::cli
