#ifndef SCHURKIT_CLI_HPP
#define SCHURKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace schurkit {

// Runs the schurkit command line. Exit codes: 0 success, 1 a computed
// verdict failed, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurkit

#endif
