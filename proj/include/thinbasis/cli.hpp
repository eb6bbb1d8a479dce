// cli.hpp
// Command dispatch for the thinbasis tool, callable in-process.
//
//   thinbasis [--regime linear|exp] [--c <rational>] [--cap <digits>]
//             <member|represent|sigma|digits|enumerate|verify-modular|verify-basis|growth>
//             [args] [--out <path>]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or capacity error.

#pragma once
#include <ostream>

namespace thinbasis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thinbasis::cli
