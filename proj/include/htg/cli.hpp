#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace htg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDomainError = 2;
inline constexpr int kInconclusive = 3;

// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Randomized invariant suite over every module; prints one line per check.
bool selftest(std::ostream& out, std::uint64_t seed);

}  // namespace htg::cli
