#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbarrier::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitUnwritable = 4;
inline constexpr int kExitMaxFailures = 125;

/// Runs one command line (without the program name).  Results go to `out`
/// unless --out is given; diagnostics go to `err`.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbarrier::cli
