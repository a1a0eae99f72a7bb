#pragma once

#include <cstdint>
#include <string>

#include "io.hpp"

namespace scg::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // a verification found a counterexample, or --check differs
  kInvalid = 2,
  kNoEquilibrium = 3,
  kCapExceeded = 4,
};

struct CommandResult {
  Json result;
  int status = kOk;
};

/// Runs `command` on a normalized input document (the "input" member of a
/// report). Deterministic: identical inputs give identical results.
CommandResult execute(const std::string& command, const Json& input);

}  // namespace scg::cli
