#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpab {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

// Runs the command-line tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpab
