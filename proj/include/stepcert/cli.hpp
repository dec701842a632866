#ifndef STEPCERT_CLI_HPP
#define STEPCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stepcert {

/// Entry point behind the stepcert binary. `args` excludes the program name.
/// Exit codes: 0 = all checks passed or skipped, 1 = some check failed,
/// 2 = usage or configuration error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stepcert

#endif
