#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prefagg {

enum class ErrorCode {
  // profile validation
  SelfComparison,
  DuplicatePair,
  UnknownAlternative,
  Empty,
  InvalidDocument,
  // numerics
  NoConvergence,
  Singular,
  DomainExit,
  // procedure preconditions
  NotIndivisible,
  Disconnected,
  IsolatedAlternative,
  EpsilonOutOfRange,
  DivideByZero,
  // axioms / fixtures
  TooLarge,
  NotAMacrovertex,
  InvalidPerturbation,
  UnknownFixture,
  UnknownMethod,
};

/// Stable upper-snake identifier used in machine-readable reports.
std::string_view error_name(ErrorCode code) noexcept;

struct SolveDiagnostics {
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, SolveDiagnostics diag = {})
      : std::runtime_error(message), code_(code), diag_(diag) {}

  ErrorCode code() const noexcept { return code_; }
  const SolveDiagnostics& diagnostics() const noexcept { return diag_; }

 private:
  ErrorCode code_;
  SolveDiagnostics diag_;
};

}  // namespace prefagg
