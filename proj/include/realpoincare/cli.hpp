#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "realpoincare/pipeline.hpp"

namespace realpoincare {

struct RunConfig {
  std::string command;  ///< analyze | series | verify | conjugate
  std::string input_path;
  RunOptions options;
  bool json = false;
};

/// Runs one command; returns the process exit code (see exit_code).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (args[0] is the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realpoincare
