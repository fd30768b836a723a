#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catlab::cli {

/// Process exit codes.
enum exit_status : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceGuard = 3,
};

inline constexpr const char* kToolVersion = "0.3.0";

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Option values resolve as: flags, then --config file
/// (key=value), then CATLAB_SEED for --seed, then built-in defaults.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// %.17g in the C locale: round-trip safe.
std::string format_real(double v);

}  // namespace catlab::cli
