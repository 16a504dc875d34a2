#pragma once

#include <iosfwd>

namespace saddle::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

/// Entry point shared by the `saddle` binary and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace saddle::cli
