#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zxf::cli {

enum ExitCode : int {
    kComputed = 0,
    kUsageError = 2,
    kCheckFailed = 3,
    kInternalError = 4,
};

/// Runs one command line (without the program name), writing to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zxf::cli
