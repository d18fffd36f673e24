#pragma once

#include <stdexcept>
#include <string>

namespace obk {

// Every failure mode of the workbench carries one of these kinds so the CLI
// can map it to an exit code (input error vs. budget vs. internal bug).
enum class ErrorKind {
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotAbelian,
  NotAutomorphism,
  NotFunctorial,
  NotACocycle,
  DegreeTooHigh,
  NotEquivariant,
  ModuleMismatch,
  PrecrossedViolation,
  PeifferViolation,
  CompositionMismatch,
  FibresNotGroupoidal,
  SourceTargetMismatch,
  BudgetExceeded,
  ParseError,
  ValidationError,
  InternalError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// Enumeration guard. Exponential searches refuse to start when the candidate
// count exceeds this; OBSTRUKT_BUDGET or --budget override the default 1e8.
long long default_budget();
long long resolve_budget(long long requested);  // 0 means "use default"

inline void check_budget(double candidates, long long budget, const std::string& what) {
  if (candidates > static_cast<double>(budget))
    fail(ErrorKind::BudgetExceeded, what + " needs ~" + std::to_string(static_cast<long long>(candidates)) +
                                        " candidates, budget is " + std::to_string(budget));
}

}  // namespace obk
