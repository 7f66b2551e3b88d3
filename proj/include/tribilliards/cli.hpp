#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribilliards {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitViolation = 3 };

// Runs one command line (args excludes the program name). `color` allows ANSI
// color; it is ignored when TRIBILLIARDS_NO_COLOR is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace tribilliards
