#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planebranch {

enum class ErrorKind {
  Parse,
  InvalidCharSeq,
  NotPlaneBranchSemigroup,
  NotInSemigroup,
  IndexOutOfRange,
  InvalidIndices,
  PreconditionViolated,
  DomainError,
  ConvergenceFailure,
  NegativeCoefficient,
  InvalidCutoff,
  ZeroLambda,
  Overflow,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidCharSeq: return "InvalidCharSeq";
    case ErrorKind::NotPlaneBranchSemigroup: return "NotPlaneBranchSemigroup";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidIndices: return "InvalidIndices";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::InvalidCutoff: return "InvalidCutoff";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Error";
}

/// Single exception type; `kind()` distinguishes the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& reason)
      : std::runtime_error(std::string(to_string(kind)) + ": " + reason), kind_(kind), reason_(reason) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorKind kind_;
  std::string reason_;
};

}  // namespace planebranch
