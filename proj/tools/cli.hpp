#pragma once

#include "evaluate.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pbr::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3, kPrecision = 4 };

int exit_code_for(ErrorCode c);

// Report for one input; throws pbr::Error on evaluation failure.
Json run_command(const std::string& command, const Session& s, const std::string& input);

// Report or {"input", "error"} object, with the exit code it maps to.
Json run_guarded(const std::string& command, const Session& s, const std::string& input, int& code);

std::string render_text(const Json& report);

// Full command line (argv[0] excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pbr::cli
