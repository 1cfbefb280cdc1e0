#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbsmooth {

enum class ErrorKind {
  DimensionMismatch,
  NotOrthogonal,
  ClosureExceeded,
  InsufficientNodes,
  NotPolynomial,
  DegreeBoundExceeded,
  SeparationFailure,
  DomainViolation,
  BadRadii,
  BandViolation,
  RefinementExhausted,
  MarginViolation,
  NotInvariant,
  StageBoundViolation,
  CoverageGap,
  ParameterOutOfRange,
  EvaluationFailure,
  ParseError,
  ConfigError,
  FingerprintMismatch,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is an Error carrying its kind and, where one exists,
/// the witness point that triggered it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<double> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<double>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<double> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::vector<double> witness = {}) {
  throw Error(kind, message, std::move(witness));
}

inline void require_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    fail(ErrorKind::DimensionMismatch, std::string(what) + ": expected dimension " +
                                           std::to_string(expected) + ", got " +
                                           std::to_string(actual));
  }
}

}  // namespace orbsmooth
