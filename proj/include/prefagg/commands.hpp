#pragma once

#include <iosfwd>

#include "prefagg/error.hpp"

namespace prefagg {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitInapplicable = 2,
  kExitNoConvergence = 3,
  kExitViolation = 4,
  kExitReproduceFail = 5,
};

int exit_code_for(ErrorCode code) noexcept;

/// Entry point of the prefagg tool: rate, audit, search, reproduce, fixture.
/// Reports go to `out`; errors go to `err` as {"error", "message", "exit_code"}.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prefagg
