#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and returns the process exit code.

#include <ostream>
#include <string>
#include <vector>

namespace mldeg::cli {

enum ExitCode { ok = 0, property_failure = 1, usage = 2, disagreement = 3 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mldeg::cli
