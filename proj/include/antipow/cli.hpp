#ifndef ANTIPOW_CLI_HPP
#define ANTIPOW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace antipow::cli {

// Exit codes: 0 success, 1 verification failure (counterexample found),
// 2 usage error, 3 resource cap hit.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace antipow::cli

#endif
