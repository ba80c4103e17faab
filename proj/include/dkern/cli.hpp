#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dkern/kernels.hpp"

namespace dkern {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kStatusCapVariable = "DKERN_STATUS_CAP";

struct CliConfig {
  int status_cap = kDefaultStatusCap;
};

/// Default caps, with the status cap overridden by DKERN_STATUS_CAP when set.
CliConfig config_from_environment();

/// Runs one invocation; `args` excludes the program name. A file argument
/// of "-" reads from `in`. Verdicts go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when verify finds a violation, 2 on usage, parse
/// or precondition errors and on exceeded caps.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                const CliConfig& config = {});

}  // namespace dkern
