#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbm::cli {

enum ExitCode : int {
    kOk = 0,
    kEngineError = 1,
    kUsageError = 2,
    kVerifyFailed = 3,
};

/// Environment variable naming the default --format (text, json or csv).
inline constexpr const char* kFormatEnv = "SBMOTIVE_FORMAT";

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbm::cli
