#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqs::cli {

enum ExitCode : int { kSuccess = 0, kFalse = 1, kUsage = 2 };

/// Runs one subcommand; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqs::cli
