#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitBound = 3;

// args[0] is the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bzeta::cli
