#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlchar::cli {

inline constexpr const char* kSchema = "dlchar/1";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlchar::cli
