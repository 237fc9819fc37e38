#ifndef IRRED_CLI_HPP
#define IRRED_CLI_HPP

// Command-line front end.  `args` excludes the program name.  Reports go to
// `out`, diagnostics to `err`; the return value is the process exit status:
//   0  success (verdicts live in the report, never in the status)
//   2  usage, parse or precondition error
//   3  an enumeration cap was exceeded
//   1  anything else

#include <iosfwd>
#include <string>
#include <vector>

namespace irred::cli {

inline constexpr int kSchemaVersion = 1;

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace irred::cli

#endif  // IRRED_CLI_HPP
