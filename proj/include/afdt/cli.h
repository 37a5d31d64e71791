#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afdt::cli {

/// Exit codes of the `afdt` tool.
enum ExitStatus : int {
  kOk = 0,
  kFindings = 1,  // validation violations, invalid model, or an active TLE
  kUsage = 2,     // bad flags, unreadable or unparsable files, caps exceeded
};

/// Runs `afdt <subcommand> ...`; args[0] is the program name. Machine-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afdt::cli
