#ifndef CHARCALC_CLI_HPP
#define CHARCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace charcalc::cli {

/// Runs the command line given argv-style arguments (without the program
/// name). Returns the process exit code: 0 on success, nonzero on usage or
/// computation errors. All output goes to the supplied streams, which keeps
/// the driver testable and the output deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charcalc::cli

#endif
