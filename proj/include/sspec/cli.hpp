#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sspec {

// Full command-line run: parse, enumerate (or replay the cache), report.
// Returns the process exit code (0 ok, 2 usage, 3 runtime, 4 I/O).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_cache = std::nullopt);

}  // namespace sspec
