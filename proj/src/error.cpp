#include "sepcong/error.hpp"

namespace sepcong {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::CommutativityViolation: return "CommutativityViolation";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NoZeroElement: return "NoZeroElement";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotProper: return "NotProper";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::EmptySeparator: return "EmptySeparator";
    case Errc::QuotientNotStar: return "QuotientNotStar";
    case Errc::NonzeroNotClosed: return "NonzeroNotClosed";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::InternalCongruenceCheckFailure: return "InternalCongruenceCheckFailure";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::UnitModulus: return "UnitModulus";
    case Errc::AllZero: return "AllZero";
    case Errc::NotAnIdealLattice: return "NotAnIdealLattice";
    case Errc::NotPrincipalWitness: return "NotPrincipalWitness";
    case Errc::InvalidDomain: return "InvalidDomain";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sepcong
