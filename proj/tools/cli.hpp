#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tokenham::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;              // Hamiltonian / accepted / found
inline constexpr int kRejected = 1;        // certificate rejected
inline constexpr int kNotHamiltonian = 2;  // proven non-Hamiltonian / none
inline constexpr int kUnknown = 3;         // no verdict / budget exhausted
inline constexpr int kUsage = 64;          // bad flags or unreadable input
inline constexpr int kTooLarge = 65;       // materialization cap exceeded

/// Environment variable overriding the token-graph materialization cap.
inline constexpr const char* kCapEnv = "TOKENHAM_MAX_VERTICES";

/// Runs one command line (without the program name). Reads "-" file
/// arguments from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tokenham::cli
