#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sylow::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRefused = 2, kCrossCheck = 3 };

/// Runs one `sylowtool` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The four squarefree 4/9 certificates tabulated by `table certificates`.
const std::vector<std::vector<std::uint64_t>>& known_certificate_sets();

}  // namespace sylow::cli
