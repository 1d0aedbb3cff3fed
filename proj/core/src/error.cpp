#include "pmob/error.hpp"

namespace pmob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::PermutationTooLong: return "PermutationTooLong";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::OperandTooShort: return "OperandTooShort";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::NotAnOscillation: return "NotAnOscillation";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pmob
