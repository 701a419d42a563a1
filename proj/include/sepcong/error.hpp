#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sepcong {

enum class Errc {
  IndexOutOfRange,
  AssociativityViolation,
  CommutativityViolation,
  EmptySet,
  NoZeroElement,
  NoIdentity,
  TooSmall,
  NotAnIdeal,
  NotProper,
  NotMaximal,
  NotACongruence,
  EmptySeparator,
  QuotientNotStar,
  NonzeroNotClosed,
  SizeLimitExceeded,
  InternalCongruenceCheckFailure,
  DomainMismatch,
  NotDivisible,
  DivisionByZero,
  ZeroModulus,
  UnitModulus,
  AllZero,
  NotAnIdealLattice,
  NotPrincipalWitness,
  InvalidDomain,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure carries a code and, where one exists, the offending element
// indices (an associativity triple, a commutativity pair, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::size_t> witness_;
};

// Outcome of a law checker. A failing law is a verdict, not an exception.
struct Verdict {
  bool pass = true;
  std::string clause;                // which assertion failed (empty on pass)
  std::vector<std::size_t> witness;  // element indices demonstrating the failure
  std::string detail;

  static Verdict ok(std::string detail = {}) { return {true, {}, {}, std::move(detail)}; }
  static Verdict fail(std::string clause, std::vector<std::size_t> witness = {},
                      std::string detail = {}) {
    return {false, std::move(clause), std::move(witness), std::move(detail)};
  }
  static Verdict fail_with(std::string clause, const std::vector<std::uint32_t>& witness,
                      std::string detail = {}) {
    return fail(std::move(clause), std::vector<std::size_t>(witness.begin(), witness.end()),
                std::move(detail));
  }
  explicit operator bool() const noexcept { return pass; }
};

}  // namespace sepcong
