#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mresr::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kAccept = 0, kReject = 1, kUsage = 2, kResource = 3 };

/// Runs one `mrest` invocation. `args` excludes the program name. Paths
/// given as "-" (or omitted where allowed) read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace mresr::cli
