#ifndef CHEMTREE_CLI_APP_HPP
#define CHEMTREE_CLI_APP_HPP

#include <ostream>

namespace chemtree::cli {

// Exit codes: 0 success, 2 usage or input parse error, 3 precondition
// violation, 4 a verification check found a counterexample.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chemtree::cli

#endif
