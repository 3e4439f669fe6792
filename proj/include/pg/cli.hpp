#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerify = 3;
inline constexpr int kExitParse = 4;

/**
 * Command line front end with subcommands solve, gen, bench and verify.
 * args excludes the program name. Games are read from the named file or,
 * for solve without a file or with "-", from in.
 */
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pg
