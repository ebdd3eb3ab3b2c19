// Command-line front end.
//
//   graded [--tnorm K] [--grid-denominator M] [--json] <command> [options]
//
// Commands: parse, eval, entail, check-proof, qcheck, score, demo.
// Exit codes: 0 success or verdict true, 1 verdict false (countermodel,
// rejected proof, failed Q check, disagreeing scores), 2 usage, input or
// resource error.

#ifndef GRADED_CLI_HPP
#define GRADED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace graded::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graded::cli

#endif  // GRADED_CLI_HPP
