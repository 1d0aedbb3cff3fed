#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmob {

enum class ErrorKind {
  NotAPermutation,
  PermutationTooLong,
  IndexOutOfRange,
  EmptyOperand,
  OperandTooShort,
  InvalidShape,
  NotAnOscillation,
  NotContained,
  TooLarge,
  PreconditionViolation,
  Overflow,
  RangeError,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers switch on kind() when the
// distinction matters (the CLI maps ParseError to a usage exit code).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pmob
