#ifndef SUBFACTOR_CLI_HPP
#define SUBFACTOR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace subfactor::cli {

enum ExitCode : int
{
  kSuccess = 0,
  kValidationFailure = 1,
  kInconsistency = 2,
};

/// Runs one command line (without the program name). Results go to out,
/// or to the --out file; errors go to err as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace subfactor::cli

#endif // SUBFACTOR_CLI_HPP
