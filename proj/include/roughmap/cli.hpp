#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace roughmap {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitExpected = 0,    // replay matches; falsify found a counterexample; verify found none
  kExitUnexpected = 1,  // replay mismatch; verify refuted; refuted claim survived falsify
  kExitUsage = 2,       // bad arguments or input
  kExitNoneFound = 3,   // falsify exhausted its bounds on a claim not known to be false
};

// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughmap
