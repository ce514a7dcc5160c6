#ifndef FHMAP_CLI_HPP
#define FHMAP_CLI_HPP

#include <iosfwd>

namespace fhmap::cli {

enum ExitCode : int {
  kPass = 0,         // member / all checks passed
  kFail = 1,         // non-member / some check failed
  kBoundary = 2,     // boundary case or degenerate functional
  kUsage = 3,        // bad arguments or unreadable input
};

/// Entry point of the `fhmap` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fhmap::cli

#endif  // FHMAP_CLI_HPP
