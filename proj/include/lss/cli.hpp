#ifndef LSS_CLI_HPP
#define LSS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lss::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitEmpty = 1;
inline constexpr int kExitError = 2;

/// Runs one command; args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lss::cli

#endif
