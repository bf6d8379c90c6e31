#pragma once

#include <stdexcept>
#include <string>

namespace morsespec {

enum class ErrorKind {
  DimensionTooSmall,
  MalformedSimplex,
  EmptyInput,
  ArityMismatch,
  NonFinite,
  ComplexMismatch,
  CycleDetected,
  NonCriticalSupport,
  ZeroChain,
  ZeroClass,
  NonCycle,
  SpectrumMismatch,
  PreconditionViolated,
  StepCountTooSmall,
  Domain,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind, so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a bound is evaluated outside its smallness hypothesis.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& message, double threshold)
      : Error(ErrorKind::PreconditionViolated, message), threshold_(threshold) {}

  double threshold() const noexcept { return threshold_; }

 private:
  double threshold_;
};

class StepCountError : public Error {
 public:
  StepCountError(const std::string& message, long long required)
      : Error(ErrorKind::StepCountTooSmall, message), required_(required) {}

  long long required() const noexcept { return required_; }

 private:
  long long required_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace morsespec
