#ifndef JACKCONE_TOOLS_CLI_HPP
#define JACKCONE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jackcone::cli {

/// Exit codes: 0 success, 1 failed verdict / gate / violation, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jackcone::cli

#endif  // JACKCONE_TOOLS_CLI_HPP
