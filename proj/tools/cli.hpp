#pragma once

#include <iosfwd>

namespace gale::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;
inline constexpr int kBindFailure = 4;

/// Runs `gale <subcommand> ...`; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Asks a running `serve` to shut down (saving cache and snapshot).
void request_stop();

}  // namespace gale::cli
