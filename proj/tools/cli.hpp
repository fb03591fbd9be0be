#pragma once

#include <iosfwd>

namespace fixfree::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kDomainFailure = 1;  // condition not met, no code, not fix-free, decode error
inline constexpr int kUsageError = 2;     // bad flags, unreadable files, malformed input

// Runs one command line. `in` backs file arguments given as "-".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fixfree::cli
