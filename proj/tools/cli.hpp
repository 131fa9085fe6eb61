#ifndef PREPER_TOOLS_CLI_HPP
#define PREPER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace preper::cli {

inline constexpr const char *kVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace preper::cli

#endif // PREPER_TOOLS_CLI_HPP
