#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ldlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes.
enum Exit : int { Ok = 0, Refuted = 1, Usage = 2, Undecided = 3 };

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

}  // namespace ldlab::cli
