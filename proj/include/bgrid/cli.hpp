#ifndef BGRID_CLI_HPP
#define BGRID_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bgrid {

// Command line entry point, separated from main() so tests can drive it
// in-process. `args` excludes the program name. Exit codes: 0 success (and
// an affirmative verdict where one applies), 1 valid run with a negative
// verdict (odd cycle found, bound violated), 2 usage or input errors (one
// diagnostic line on err).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace bgrid

#endif
