#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewbrace {

enum class ErrorCode {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  MissingInverse,
  OrderCapExceeded,
  DegreeMismatch,
  NotAPermutation,
  NotClosed,
  OrderMismatch,
  IdentityMismatch,
  BraceAxiomFailure,
  IndexOutOfRange,
  NotAStarSubgroup,
  NotASubgroup,
  EmptySubset,
  NotInHolomorph,
  NotRegular,
  NotAnIsomorphism,
  NotComplementary,
  NotFixedPointFree,
  NotHomomorphism,
  NotNilpotent,
  NotPrime,
  UnknownFixture,
  BadParams,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skewbrace
