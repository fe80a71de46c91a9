#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwb {

// Runs the command-line front end; returns the process exit code.
// Exit codes: 0 ok/found, 1 verdict not-found/violated, 2 input error,
// 3 budget-inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwb
