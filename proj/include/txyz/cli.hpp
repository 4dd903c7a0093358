#ifndef TXYZ_CLI_HPP_
#define TXYZ_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace txyz {

/// Runs the command-line interface on args (program name excluded), writing
/// results to out and diagnostics to err.  Exit codes: 0 success / true
/// verdict, 1 false verdict or verification failure, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace txyz

#endif  // TXYZ_CLI_HPP_
