#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace vty::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Every command produces one report; the exit code is derived from it alone.
//   verdict PASS or ANSWERED and no errors          -> 0
//   verdict FAIL, or errors from an operation       -> 1
//   USAGE_ERROR, PARSE_ERROR, UNRESOLVED_REFERENCE  -> 2
int exit_code_for(const nlohmann::json& report);

// Indented key/value rendering used for --format text.
std::string render_text(const nlohmann::json& report);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vty::cli
