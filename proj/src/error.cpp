#include "skewbrace/error.hpp"

namespace skewbrace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::BraceAxiomFailure: return "BraceAxiomFailure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAStarSubgroup: return "NotAStarSubgroup";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotInHolomorph: return "NotInHolomorph";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotFixedPointFree: return "NotFixedPointFree";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace skewbrace
