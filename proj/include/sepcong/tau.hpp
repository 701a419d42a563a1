#pragma once

// The gcd relation tau_m (a ~ b iff gcd(a, m) and gcd(b, m) are associated)
// and its comparison with the principal congruence P_{J(m)} of the ideal mD.
//
// P_{J(m)} lives on the infinite monoid (D, *). It is computed exactly on the
// finite ring D/(m): whether x*a*y lies in mD depends only on the residues of
// x, a, y modulo m, and the residues exhaust D, so (a, b) is in P_{J(m)} iff
// the residues of a and b share a class of P_{{0}} on D/(m).

#include <cstdint>
#include <vector>

#include "sepcong/semigroup.hpp"
#include "sepcong/ufd.hpp"

namespace sepcong {

struct TauClasses {
  Element modulus;
  bool unit_modulus = false;
  std::vector<Element> transversal;
  Partition partition;
  // Canonical gcd(r, m) for the members r of each class, in class order;
  // these are exactly the non-associated divisors of m.
  std::vector<Element> divisors;
};

bool tau_related(const Element& m, const Element& a, const Element& b);

// Throws ZeroModulus. A unit modulus gives a one-class result with
// unit_modulus set.
TauClasses tau_classes(const Element& m);

struct PjCongruence {
  ResidueSemigroup residues;
  Partition partition;  // P_{{0}} on the residue semigroup
};

// Throws ZeroModulus.
PjCongruence pj_congruence(const Element& m);

// tau_m == P_{J(m)} exactly, and the quotient of D/(m) by it satisfies (*).
Verdict theorem3_check(const Element& m);

// The identity class of P_{J(m)} is the set of residues coprime to m, and that
// set is the separator of {0} in D/(m). Throws ZeroModulus, UnitModulus.
Verdict separator_class_check(const Element& m);

// Number of tau_m classes (1 for units). Throws ZeroModulus.
std::size_t divisor_count(const Element& a);

// Passing to associate classes: tau and P are unions of unit orbits, P on the
// orbit monoid equals P/~, the separator maps onto the separator, and tau'
// computed on canonical representatives equals P on the orbit monoid.
Verdict dprime_coherence_check(const Element& m);

struct Triple {
  Element a;
  Element b;
  Element s;
};

// For every triple with (a, b) in tau_m, (s*a, s*b) is in tau_m as well.
// detail reports how many triples were applicable.
Verdict cr1_property_check(const Element& m, const std::vector<Triple>& triples);

// tau_0 is the associate relation, while P_{{0}} identifies all nonzero
// elements of a domain: exhibits nonzero non-associated a, b that P_{{0}}
// cannot tell apart on a bounded window of multipliers.
struct SharpnessResult {
  Verdict verdict;
  Element a;
  Element b;
};
SharpnessResult tau0_sharpness_check(const DomainId& dom);

// Seeded sampling pools.
std::vector<Element> random_poly_moduli(int p, int max_deg, std::size_t count, std::uint64_t seed);
std::vector<Element> random_quad_moduli(int d, long max_norm, std::size_t count, std::uint64_t seed);

}  // namespace sepcong
