// Command-line front end; quarantined here so tests can drive it in-process.
#ifndef SLIDETOK_CLI_HPP
#define SLIDETOK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace slidetok {

/// Runs the full CLI (decide/plan/verify/rigid/oracle/gen/bench) against the
/// given streams. Returns the process exit code: 0 yes/ok, 1 no/violation,
/// 2 usage or runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace slidetok

#endif
