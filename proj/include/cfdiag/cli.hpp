#ifndef CFDIAG_CLI_HPP
#define CFDIAG_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace cfdiag::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on a usage error (unknown
/// subcommand, bad flag, malformed literal) and 1 on a domain error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cfdiag::cli

#endif  // CFDIAG_CLI_HPP
