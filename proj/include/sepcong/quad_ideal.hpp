#pragma once

// Nonzero ideals of O_d (d one of the nine Heegner values) as rank-2 lattices
// in the (1, omega) coordinate plane, stored in column Hermite normal form
//
//     [ h11  h12 ]      basis columns (h11, 0) and (h12, h22),
//     [  0   h22 ]      h11, h22 > 0, 0 <= h12 < h11,
//
// which is unique, so ideal equality is matrix equality.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sepcong/ufd.hpp"

namespace sepcong {

class QuadIdeal {
 public:
  // Smallest ideal containing `gens`. Throws AllZero, DomainMismatch.
  static QuadIdeal from_generators(int d, std::span<const Element> gens);
  // Lattice spanned by the given coordinate vectors; throws NotAnIdealLattice
  // when the lattice is degenerate or not closed under multiplication by omega.
  static QuadIdeal from_lattice(int d, std::span<const QuadCoords> spanning);

  int d() const noexcept { return d_; }
  const Bigint& h11() const noexcept { return h11_; }
  const Bigint& h12() const noexcept { return h12_; }
  const Bigint& h22() const noexcept { return h22_; }
  // Rows of the HNF: [[h11, h12], [0, h22]].
  std::array<std::array<Bigint, 2>, 2> hnf() const;
  Bigint norm() const { return h11_ * h22_; }

  std::array<Element, 2> basis() const;
  bool contains(const Element& x) const;
  ResidueRing residues() const;

  std::string to_string() const;  // ideal(-7; 2+0*w, 1+1*w)

  friend bool operator==(const QuadIdeal& x, const QuadIdeal& y) {
    return x.d_ == y.d_ && x.h11_ == y.h11_ && x.h12_ == y.h12_ && x.h22_ == y.h22_;
  }

 private:
  QuadIdeal(int d, Bigint h11, Bigint h12, Bigint h22)
      : d_(d), h11_(std::move(h11)), h12_(std::move(h12)), h22_(std::move(h22)) {}

  int d_;
  Bigint h11_, h12_, h22_;
};

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y);
QuadIdeal conjugate(const QuadIdeal& x);

// Lagrange-Gauss reduction of the HNF basis under the norm form; returns the
// reduced pair (shortest first).
std::array<QuadCoords, 2> gauss_reduce(int d, const QuadCoords& u, const QuadCoords& v);

// Canonical generator m with (m) == A. Throws NotPrincipalWitness when the
// shortest lattice vector does not regenerate A.
Element principal_generator(const QuadIdeal& ideal);

// Parses "ideal(-7; 2, 1+1*w)".
struct IdealInput {
  int d;
  std::vector<Element> gens;
};
IdealInput parse_ideal_input(std::string_view text);

struct IdealChainResult {
  Verdict verdict;
  QuadIdeal ideal;
  Element generator;  // m with A = (m)
  QuadIdeal norm_ideal;  // A * conj(A)
  Element norm_generator;  // n with A * conj(A) = (n)
};

// m = principal_generator(A) regenerates A; P_A equals tau_m on the residues of
// A; A * conj(A) is generated by a positive rational integer n equal to N(A),
// and tau_n = P_{J(n)}.
IdealChainResult ideal_chain_check(int d, std::span<const Element> gens);

}  // namespace sepcong
