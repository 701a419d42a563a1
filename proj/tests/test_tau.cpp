#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sepcong/tau.hpp"

using namespace sepcong;

namespace {

Element Z(long v) { return Element::integer(v); }
Element P(const char* text, int p = 5) { return Element::parse(text, DomainId::poly(p)); }
Element Q(int d, long a, long b) { return Element::quad(d, a, b); }

std::vector<std::string> class_texts(const TauClasses& t) {
  std::vector<std::string> out;
  for (const auto& cls : t.partition.classes()) {
    std::string s;
    for (Elem r : cls) s += t.transversal[r].to_string(false) + " ";
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("tau classes modulo 6") {
  const auto t = tau_classes(Z(6));
  CHECK(t.partition == Partition::from_classes(6, {{0}, {1, 5}, {2, 4}, {3}}));
  CHECK(t.divisors == std::vector<Element>{Z(6), Z(1), Z(2), Z(3)});
  CHECK(divisor_count(Z(6)) == 4);
  CHECK(divisor_count(Z(12)) == 6);
  CHECK(divisor_count(Z(1)) == 1);
  CHECK(tau_classes(Z(-1)).unit_modulus);
  CHECK_THROWS_AS(tau_classes(Z(0)), Error);
}

TEST_CASE("tau classes over F2[x] modulo x^2+x") {
  const auto t = tau_classes(Element::parse("x^2+x", DomainId::poly(2)));
  CHECK(class_texts(t) == std::vector<std::string>{"0 ", "1 ", "x ", "x+1 "});
}

TEST_CASE("divisor counts agree with trial division") {
  for (long m = 2; m <= 120; ++m) CHECK(divisor_count(Z(m)) == oracle::integer_divisor_count(m));
  CHECK(divisor_count(P("x^3+2x^2+4x+3")) == 8);
  CHECK(divisor_count(Q(-1, 5, 0)) == 4);
  for (int d : kHeegnerValues) {
    for (const auto& m : random_quad_moduli(d, 80, 5, 11)) {
      CHECK(divisor_count(m) == factor_divisor_count_oracle(m));
    }
  }
  for (const auto& m : random_poly_moduli(3, 3, 10, 4)) {
    CHECK(divisor_count(m) == factor_divisor_count_oracle(m));
  }
}

TEST_CASE("tau equals P_J(m)") {
  for (long m = 2; m <= 60; ++m) CHECK(theorem3_check(Z(m)));
  CHECK(theorem3_check(Z(1)));
  for (const auto& m : random_poly_moduli(2, 4, 10, 21)) CHECK(theorem3_check(m));
  for (const auto& m : random_poly_moduli(5, 3, 5, 22)) CHECK(theorem3_check(m));
  for (int d : kHeegnerValues) {
    for (const auto& m : random_quad_moduli(d, 100, 4, 23)) {
      CAPTURE(m.to_string());
      CHECK(theorem3_check(m));
    }
  }
}

TEST_CASE("P_J(m) matches the literal context comparison") {
  for (const auto& m : {Z(12), P("x^2+1", 3), Q(-1, 3, 1), Q(-3, 2, 0)}) {
    const auto pj = pj_congruence(m);
    const auto ref = oracle::literal_principal_congruence(
        pj.residues.semigroup, ElementSet(pj.residues.semigroup.order(), {0}));
    for (Elem a = 0; a < ref.size(); ++a) {
      for (Elem b = 0; b < ref.size(); ++b) CHECK(pj.partition.same_class(a, b) == ref[a][b]);
    }
  }
}

TEST_CASE("separator class is the set of residues coprime to m") {
  CHECK(separator_class_check(Z(6)).detail == "2 coprime residues");
  CHECK(separator_class_check(Element::parse("x^2", DomainId::poly(2))).detail ==
        "2 coprime residues");
  CHECK(separator_class_check(Q(-1, 1, 1)).detail == "1 coprime residues");
  for (long m = 2; m <= 60; ++m) CHECK(separator_class_check(Z(m)));
  for (int d : kHeegnerValues) {
    for (const auto& m : random_quad_moduli(d, 60, 3, 31)) CHECK(separator_class_check(m));
  }
  CHECK_THROWS_AS(separator_class_check(Z(0)), Error);
  try {
    separator_class_check(Q(-3, 0, 1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnitModulus);
  }
}

TEST_CASE("associate classes") {
  for (long m = 2; m <= 40; ++m) CHECK(dprime_coherence_check(Z(m)));
  for (const auto& m : random_poly_moduli(3, 3, 6, 41)) CHECK(dprime_coherence_check(m));
  for (int d : kHeegnerValues) {
    for (const auto& m : random_quad_moduli(d, 60, 3, 42)) {
      CAPTURE(m.to_string());
      CHECK(dprime_coherence_check(m));
    }
  }
}

TEST_CASE("tau is compatible with multiplication") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-50, 50);
  for (long m : {12L, 30L, 49L}) {
    std::vector<Triple> triples;
    for (int i = 0; i < 400; ++i) triples.push_back({Z(c(rng)), Z(c(rng)), Z(c(rng))});
    // force some applicable triples
    for (int i = 0; i < 50; ++i) {
      const auto a = Z(c(rng));
      triples.push_back({a, a + Z(m) * Z(c(rng)), Z(c(rng))});
    }
    const auto v = cr1_property_check(Z(m), triples);
    CHECK(v);
    CHECK(v.detail != "0 applicable triples");
  }
}

TEST_CASE("tau_0 is strictly finer than P_{0}") {
  const auto zi = tau0_sharpness_check(DomainId::integers());
  CHECK(zi.verdict);
  CHECK(zi.a == Z(2));
  CHECK(zi.b == Z(3));
  const auto f = tau0_sharpness_check(DomainId::poly(5));
  CHECK(f.verdict);
  CHECK(f.a == P("x"));
  CHECK(f.b == P("x+1"));
  for (int d : kHeegnerValues) {
    const auto r = tau0_sharpness_check(DomainId::quadratic(d));
    CHECK(r.verdict);
    CHECK_FALSE(associated(r.a, r.b));
    CHECK_FALSE(is_unit(r.a));
    CHECK_FALSE(is_unit(r.b));
  }
}

TEST_CASE("sampling pools are reproducible") {
  CHECK(random_poly_moduli(5, 4, 10, 3) == random_poly_moduli(5, 4, 10, 3));
  for (const auto& m : random_poly_moduli(5, 4, 10, 3)) CHECK(m.as_poly().back() == 1);
  for (const auto& m : random_quad_moduli(-7, 50, 10, 3)) {
    CHECK(norm(m) <= 50);
    CHECK_FALSE(is_unit(m));
  }
}
