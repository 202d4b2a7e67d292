#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symcoupling::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kNumeric = 4;

/// Runs the symcoup command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace symcoupling::cli
