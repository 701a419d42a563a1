#pragma once

// Exact arithmetic in three families of unique factorization domains:
//   - the rational integers,
//   - F_p[x] for a prime p <= 97,
//   - O_d for the nine class-number-one imaginary quadratic fields,
// with units, canonical associates, gcds and finite residue rings D/(m).

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sepcong/semigroup.hpp"

namespace sepcong {

using Bigint = mpz_class;

inline constexpr std::array<int, 9> kHeegnerValues{-1, -2, -3, -7, -11, -19, -43, -67, -163};
inline constexpr int kMaxFieldPrime = 97;

class DomainId {
 public:
  enum class Kind { Integers, PolyOverPrimeField, ImagQuadratic };

  static DomainId integers() { return DomainId(Kind::Integers, 0); }
  // Throws InvalidDomain unless p is a prime <= 97.
  static DomainId poly(int p);
  // Throws InvalidDomain unless d is one of the nine Heegner values.
  static DomainId quadratic(int d);
  // "int" | "Z" | "F5" | "F5[x]" | "Q(-7)"
  static DomainId parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int prime() const noexcept { return param_; }
  int d() const noexcept { return param_; }

  // omega = sqrt(d) (trace 0, norm -d) for d = -1, -2; omega = (1+sqrt(d))/2
  // (trace 1, norm (1-d)/4) otherwise, so omega^2 = trace*omega - norm.
  int omega_trace() const noexcept;
  long omega_norm() const noexcept;

  std::string to_string() const;

  friend bool operator==(const DomainId&, const DomainId&) = default;
  friend auto operator<=>(const DomainId&, const DomainId&) = default;

 private:
  DomainId(Kind kind, int param) : kind_(kind), param_(param) {}
  Kind kind_;
  int param_;
};

using PolyCoeffs = std::vector<std::uint32_t>;  // little-endian, no trailing zeros

struct QuadCoords {
  Bigint a;  // coefficient of 1
  Bigint b;  // coefficient of omega
};

class Element {
 public:
  static Element integer(Bigint value);
  static Element poly(int p, PolyCoeffs coeffs);  // reduces mod p, trims
  static Element quad(int d, Bigint a, Bigint b);
  static Element zero(const DomainId& dom);
  static Element one(const DomainId& dom);
  // Accepts "12", "3x^2+x+4 @ F5", "2+1*w @ Q(-7)". Without an "@" suffix
  // the text is read in `dom` (integers when absent).
  static Element parse(std::string_view text, std::optional<DomainId> dom = std::nullopt);

  const DomainId& domain() const noexcept { return dom_; }
  const Bigint& as_integer() const { return std::get<Bigint>(v_); }
  const PolyCoeffs& as_poly() const { return std::get<PolyCoeffs>(v_); }
  const QuadCoords& as_quad() const { return std::get<QuadCoords>(v_); }

  bool is_zero() const;
  // Degree of a polynomial; -1 for the zero polynomial.
  int degree() const;

  // Round-trips through parse. Integers print bare; other domains carry
  // their " @ F5" / " @ Q(-7)" suffix unless `with_domain` is false.
  std::string to_string(bool with_domain = true) const;

  friend bool operator==(const Element& x, const Element& y);
  friend bool operator<(const Element& x, const Element& y);

 private:
  Element(DomainId dom, std::variant<Bigint, PolyCoeffs, QuadCoords> v)
      : dom_(dom), v_(std::move(v)) {}

  DomainId dom_;
  std::variant<Bigint, PolyCoeffs, QuadCoords> v_;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Element& x, const Element& y);

// |x|, p^deg x (0 for zero), or the field norm.
Bigint norm(const Element& x);
Element conjugate(const Element& x);  // identity outside the quadratic case

bool is_unit(const Element& x);
std::vector<Element> units(const DomainId& dom);

// One fixed representative per associate class: |x|, the monic multiple, or
// the lexicographically greatest (a, b) among the unit multiples.
Element canonical_associate(const Element& x);
bool associated(const Element& x, const Element& y);

// Canonical gcd; gcd(a, 0) = canonical_associate(a) and gcd(0, 0) = 0.
// Quadratic gcds are principal generators of the ideal (a, b).
Element gcd(const Element& a, const Element& b);

bool divides(const Element& a, const Element& b);
// q with b = a*q. Throws DivisionByZero, NotDivisible.
Element div_exact(const Element& b, const Element& a);

// Polynomial division with remainder over F_p. Throws DivisionByZero.
std::pair<Element, Element> poly_divmod(const Element& num, const Element& den);

// --- residue rings -----------------------------------------------------------

inline constexpr std::size_t kMaxResidues = std::size_t{1} << 22;
inline constexpr std::size_t kMaxResidueTable = 4096;

// D/(m) for nonzero m with a fixed transversal order:
//   integers:   0, 1, ..., |m|-1
//   F_p[x]:     index i <-> the polynomial whose base-p digits of i are its
//               coefficients, constant term first (all degrees < deg m)
//   quadratic:  index b*h11 + a <-> a + b*omega, 0 <= a < h11, 0 <= b < h22,
//               where [[h11, h12], [0, h22]] is the HNF of the ideal (m)
class ResidueRing {
 public:
  // Throws ZeroModulus, SizeLimitExceeded (more than kMaxResidues classes).
  static ResidueRing of(const Element& m);
  // Quadratic ring modulo the lattice with column HNF [[h11, h12], [0, h22]].
  static ResidueRing of_quad_lattice(int d, const Bigint& h11, const Bigint& h12,
                                     const Bigint& h22);

  const DomainId& domain() const noexcept { return dom_; }
  std::size_t size() const noexcept { return size_; }
  Element element(std::size_t index) const;
  std::vector<Element> transversal() const;
  std::size_t reduce(const Element& x) const;

  // Multiplicative Cayley table; zero of the semigroup is residue 0.
  // Throws SizeLimitExceeded beyond kMaxResidueTable residues.
  CommSemigroup multiplicative_semigroup() const;

 private:
  ResidueRing(DomainId dom) : dom_(dom) {}

  DomainId dom_;
  std::size_t size_ = 1;
  Bigint int_modulus_;
  PolyCoeffs monic_modulus_;  // polynomial case
  Bigint h11_, h12_, h22_;    // quadratic case
};

std::vector<Element> enumerate_residues(const Element& m);

struct ResidueSemigroup {
  Element modulus;
  ResidueRing ring;
  std::vector<Element> transversal;
  CommSemigroup semigroup;

  std::size_t reduce(const Element& x) const { return ring.reduce(x); }
};

ResidueSemigroup residue_semigroup(const Element& m);

// --- divisor-count oracle ------------------------------------------------------

struct OracleCaps {
  Bigint max_abs = 1000000;
  int max_deg = 8;
  Bigint max_norm = 10000;
};

// Number of pairwise non-associated divisors of a nonzero a, by trial
// division against every candidate. Throws SizeLimitExceeded past the caps.
std::size_t factor_divisor_count_oracle(const Element& a, const OracleCaps& caps = {});

// Every nonzero element with norm <= bound (quadratic domains only).
std::vector<Element> quad_elements_up_to_norm(int d, const Bigint& bound);

}  // namespace sepcong
