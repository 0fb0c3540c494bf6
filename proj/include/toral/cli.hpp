#pragma once

// Command-line front end. Exit codes: 0 verified success, 1 verification
// failure (or nothing verifiable to emit), 2 input error, 3 only
// inconclusive results.

#include <ostream>
#include <string>
#include <vector>

namespace toral {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInconclusive = 3;

// args excludes the program name.
int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace toral
