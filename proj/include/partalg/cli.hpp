#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partalg {

  inline constexpr int kExitPass  = 0;
  inline constexpr int kExitFail  = 1;
  inline constexpr int kExitUsage = 2;

  // Runs the command line `args` (without the program name) and returns the
  // exit code. Nothing is written outside `out`, `err` and --json targets.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace partalg
