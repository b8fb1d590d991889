#pragma once

#include <ostream>

namespace qseries::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsageOrData = 2;

/// Entry point of the qverify tool, with output streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
