#ifndef HBK_CLI_HPP
#define HBK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hbk {

// Runs the command-line front end on the given arguments (without argv[0]).
// Writes results to out and diagnostics to err.  Returns the process exit
// code: 0 ok, 1 usage error, 2 domain error, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hbk

#endif
