#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mjdt {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitInvalid = 2;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mjdt
