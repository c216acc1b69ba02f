#ifndef DHIER_CLI_HPP
#define DHIER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dhier {

enum ExitCode { kSuccess = 0, kError = 1, kNegative = 2 };

// Runs one command line (without the program name). Output and
// diagnostics go to the given streams; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Same, splitting a single line the way a shell would (quotes, escapes).
int run_line(const std::string& line, std::ostream& out, std::ostream& err);

} // namespace dhier

#endif
