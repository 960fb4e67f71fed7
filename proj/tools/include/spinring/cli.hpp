#pragma once

#include <string>
#include <vector>

namespace spinring::cli {

// Parses argv and dispatches to a subcommand. Exit codes: 0 success,
// 1 computation failure, 2 usage error.
int run(int argc, const char* const* argv);

// Same, for callers that assemble arguments programmatically; `args`
// excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace spinring::cli
