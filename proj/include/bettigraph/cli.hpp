#ifndef BETTIGRAPH_CLI_HPP
#define BETTIGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bettigraph {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1; // detector/oracle/scan found nothing
inline constexpr int kExitError = 2;    // bad input, flags, or usage

// Batch front end; `args` excludes the program name. Reads `--input -`
// from `in`. Returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err, std::istream& in);

} // namespace bettigraph

#endif
