#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace autcrit {

enum class ErrorCode {
  PrimeMismatch,
  VarUndefined,
  HypothesisViolation,
  InvalidPartition,
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  OrderBoundExceeded,
  InvalidPermutation,
  NotASubgroup,
  NotNormal,
  NotAbelian,
  NotPGroup,
  NotNilpotent,
  ParentMismatch,
  ClassNotTwo,
  AbelianInput,
  IoError,
  ParseError,
  UnknownGroup,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrimeMismatch: return "PRIME_MISMATCH";
    case ErrorCode::VarUndefined: return "VAR_UNDEFINED";
    case ErrorCode::HypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case ErrorCode::InvalidPartition: return "INVALID_PARTITION";
    case ErrorCode::NotLatinSquare: return "NOT_LATIN_SQUARE";
    case ErrorCode::NotAssociative: return "NOT_ASSOCIATIVE";
    case ErrorCode::NoIdentity: return "NO_IDENTITY";
    case ErrorCode::OrderBoundExceeded: return "ORDER_BOUND_EXCEEDED";
    case ErrorCode::InvalidPermutation: return "INVALID_PERMUTATION";
    case ErrorCode::NotASubgroup: return "NOT_A_SUBGROUP";
    case ErrorCode::NotNormal: return "NOT_NORMAL";
    case ErrorCode::NotAbelian: return "NOT_ABELIAN";
    case ErrorCode::NotPGroup: return "NOT_P_GROUP";
    case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::ParentMismatch: return "PARENT_MISMATCH";
    case ErrorCode::ClassNotTwo: return "CLASS_NOT_TWO";
    case ErrorCode::AbelianInput: return "ABELIAN_INPUT";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownGroup: return "UNKNOWN_GROUP";
  }
  return "UNKNOWN";
}

/// Every failure in the library is reported through this exception; `code()`
/// is the stable machine-readable part, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace autcrit
