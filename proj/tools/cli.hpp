#ifndef GENTLEQ_TOOLS_CLI_HPP
#define GENTLEQ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gentle::cli {

// Runs the command line tool on args (program name excluded).  Returns the
// process exit code: 0 on success, 1 when an operation fails its own
// guarantees (broken pairing, failed postcondition, non-isomorphic inputs to
// 'iso'), 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gentle::cli

#endif  // GENTLEQ_TOOLS_CLI_HPP
