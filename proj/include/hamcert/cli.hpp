#ifndef HAMCERT_CLI_HPP
#define HAMCERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hamcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // NONE / NO / FAIL / obstruction
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Graphs are read as
/// newline-delimited graph6 from `in` unless --input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hamcert::cli

#endif  // HAMCERT_CLI_HPP
