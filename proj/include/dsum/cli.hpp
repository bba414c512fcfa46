#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsum {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2 };

/// Runs the CLI. args excludes the program name. JSON goes to out, the
/// one-line diagnostic for a usage or parse error goes to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace dsum
