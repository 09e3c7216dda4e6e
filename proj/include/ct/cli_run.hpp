#ifndef CT_CLI_RUN_HPP
#define CT_CLI_RUN_HPP

#include <iostream>
#include <string>
#include <vector>

namespace ct {

// Command-line front door, separated from main() so tests can drive it.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 state budget exceeded.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ct

#endif
