#pragma once

#include <iosfwd>

namespace trinom::cli {

inline constexpr const char* kCapEnv = "TRINOM_CAP_BITS";

enum Exit { ok = 0, input_error = 1, undecided = 2, internal_error = 3 };

/// Entry point of trinomctl; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trinom::cli
