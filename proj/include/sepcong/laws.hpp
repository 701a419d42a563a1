#pragma once

// Checkers for the structural laws relating ideals, separators and principal
// congruences. Each returns a Verdict; exceptions are reserved for inputs that
// violate a checker's precondition.

#include <string>
#include <vector>

#include "sepcong/semigroup.hpp"

namespace sepcong {

// Commutative monoid with zero, every non-identity element torsion, and
// s -> A(s) injective. Clauses: "monoid-with-zero", "torsion",
// "annihilator-injective".
Verdict condition_star_check(const CommSemigroup& s);

// Antisymmetry of a <= b iff bS ⊆ aS. Throws NoIdentity.
Verdict natural_order_check(const CommSemigroup& s);

// The torsion set is an ideal. Needs a zero and |S| >= 2.
Verdict torsion_ideal_check(const CommSemigroup& s);

// For an ideal I with nonempty separator: I and Sep I are single P_I-classes
// mapping to the zero and identity of C/P_I, and C/P_I satisfies (*).
// Throws NotAnIdeal, EmptySeparator.
Verdict theorem1_forward_check(const CommSemigroup& c, const ElementSet& ideal);

// For a congruence alpha with C/alpha satisfying (*): the zero class I is an
// ideal, Sep I is the identity class, and P_I == alpha.
// Throws NotACongruence, QuotientNotStar.
Verdict theorem1_converse_check(const CommSemigroup& c, const Partition& alpha);

// On a maximal ideal M: prime, Sep M nonempty, and |S/P_M| = 2 as a monoid
// with zero must hold or fail together. Throws NotMaximal.
Verdict theorem2_check(const CommSemigroup& s, const ElementSet& maximal);

// Removing the zero: restriction of P_I to C* equals P_{I*} and the quotients
// are isomorphic. Throws NoZeroElement, NonzeroNotClosed, NotAnIdeal.
Verdict strip_zero_check(const CommSemigroup& c, const ElementSet& ideal);

struct LawResult {
  std::string law;
  std::string instance;
  Verdict verdict;
};

struct LawReport {
  std::vector<LawResult> results;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  void merge(const LawReport& other);
};

inline constexpr std::size_t kConverseSubsetMaxOrder = 12;

// Runs every applicable check on one semigroup: the torsion-ideal law, the
// (*) => natural-order implication, the forward direction on every ideal with
// nonempty separator, the converse on every P_H with a (*)-quotient (all
// subsets H, orders <= 12), the prime/separator/two-class equivalence on
// every maximal ideal, and zero stripping where the nonzero part is closed.
LawReport run_law_suite(const CommSemigroup& s);

}  // namespace sepcong
