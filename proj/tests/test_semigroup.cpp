#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sepcong/generate.hpp"
#include "sepcong/semigroup.hpp"

using namespace sepcong;
using namespace sepcong::fixtures;

namespace {

// Idealizer straight from its definition.
ElementSet brute_idealizer(const CommSemigroup& s, const ElementSet& a) {
  ElementSet out(s.order());
  for (Elem x = 0; x < s.order(); ++x) {
    bool ok = true;
    for (Elem y : a.members()) ok = ok && a.contains(s.mul(x, y));
    if (ok) out.insert(x);
  }
  return out;
}

ElementSet brute_separator(const CommSemigroup& s, const ElementSet& a) {
  return brute_idealizer(s, a) & brute_idealizer(s, a.complement());
}

ElementSet subset_from_mask(std::size_t n, unsigned mask) {
  ElementSet out(n);
  for (Elem x = 0; x < n; ++x) {
    if (mask >> x & 1U) out.insert(x);
  }
  return out;
}

std::vector<CommSemigroup> sample_semigroups() {
  std::vector<CommSemigroup> out{table1(), table2(), zmod_mult(4), zmod_mult(6), zmod_mult(8),
                                 zmod_add(5)};
  for (std::size_t n = 5; n <= 7; ++n) {
    RandomCommSemigroups gen(n, 1234 + n);
    for (int i = 0; i < 6; ++i) out.push_back(gen.next());
  }
  return out;
}

}  // namespace

TEST_CASE("validation reports the offending cells") {
  SUBCASE("out of range") {
    try {
      CommSemigroup::validate(2, {0, 1, 1, 2});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IndexOutOfRange);
    }
  }
  SUBCASE("not commutative") {
    try {
      CommSemigroup::validate(2, {0, 0, 1, 1});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CommutativityViolation);
      CHECK(e.witness().size() == 2);
    }
  }
  SUBCASE("not associative") {
    // (0*0)*1 = 0 but 0*(0*1) = 1
    try {
      CommSemigroup::validate(2, {1, 0, 0, 0});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::AssociativityViolation);
      REQUIRE(e.witness().size() == 3);
      const auto& w = e.witness();
      const std::vector<Elem> t{1, 0, 0, 0};
      CHECK(t[t[w[0] * 2 + w[1]] * 2 + w[2]] != t[w[0] * 2 + t[w[1] * 2 + w[2]]]);
    }
  }
}

TEST_CASE("identity and zero detection") {
  const auto t1 = table1();
  CHECK(t1.identity() == lab(t1, "1"));
  CHECK(t1.zero() == lab(t1, "0"));
  const auto add = zmod_add(3);
  CHECK(add.identity() == Elem{0});
  CHECK_FALSE(add.zero().has_value());
}

TEST_CASE("table 1: ideals, idealizers, separators, contexts") {
  const auto s = table1();
  const auto zero = labelled(s, {"0"});
  const auto two_zero = labelled(s, {"2", "0"});

  const auto ideals = enumerate_ideals(s);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0] == zero);
  CHECK(ideals[1] == two_zero);
  CHECK(ideals[2].is_full());

  CHECK(idealizer(s, labelled(s, {"1", "2"})) == labelled(s, {"1"}));
  CHECK(separator(s, zero) == labelled(s, {"1"}));
  // Id{2} = {1} and Id{1, 0} = {1, 0}, so Sep{2} = {1}.
  CHECK(separator(s, labelled(s, {"2"})) == brute_separator(s, labelled(s, {"2"})));
  CHECK(separator(s, labelled(s, {"2"})) == labelled(s, {"1"}));

  const auto ctx = context(s, zero, lab(s, "2"));
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      const bool expected = x != lab(s, "1") || y != lab(s, "1");
      CHECK(ctx.contains(x, y) == expected);
    }
  }
  CHECK_THROWS_AS(is_ideal(s, ElementSet(3)), Error);
}

TEST_CASE("Z/6: P_{0} classes and quotient isomorphic to table 2") {
  const auto z6 = zmod_mult(6);
  const auto p = principal_congruence(z6, ElementSet(6, {0}));
  CHECK(p == Partition::from_classes(6, {{0}, {1, 5}, {2, 4}, {3}}));
  const auto q = quotient(z6, p);
  const auto iso = iso_check(q.semigroup, table2());
  REQUIRE(iso.has_value());
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      CHECK(table2().mul((*iso)[a], (*iso)[b]) == (*iso)[q.semigroup.mul(a, b)]);
    }
  }
  CHECK_FALSE(is_prime_ideal(z6, ElementSet(6, {0})));
}

TEST_CASE("Z/4: maximal ideal is prime, torsion set") {
  const auto z4 = zmod_mult(4);
  const auto ideals = enumerate_ideals(z4);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0] == ElementSet(4, {0}));
  CHECK(ideals[1] == ElementSet(4, {0, 2}));
  const auto maxi = maximal_ideals(z4);
  REQUIRE(maxi.size() == 1);
  CHECK(maxi[0] == ElementSet(4, {0, 2}));
  CHECK(is_prime_ideal(z4, maxi[0]));
  CHECK_THROWS_AS(is_prime_ideal(z4, ElementSet::full(4)), Error);
  CHECK(annihilator(z4, 2) == ElementSet(4, {0, 2}));
  CHECK(torsion_set(z4) == ElementSet(4, {0, 2}));
}

TEST_CASE("separator agrees with the definition on every subset") {
  for (const auto& s : sample_semigroups()) {
    const auto n = s.order();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto a = subset_from_mask(n, mask);
      CHECK(idealizer(s, a) == brute_idealizer(s, a));
      const auto sep = separator(s, a);
      CHECK(sep == brute_separator(s, a));
      CHECK(sep == separator(s, a.complement()));
    }
  }
}

TEST_CASE("principal congruence matches the literal context comparison") {
  for (const auto& s : sample_semigroups()) {
    const auto n = s.order();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto h = subset_from_mask(n, mask);
      const auto p = principal_congruence(s, h);
      const auto ref = oracle::literal_principal_congruence(s, h);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) CHECK(p.same_class(a, b) == ref[a][b]);
      }
      CHECK(is_congruence(s, p));
      // In a monoid H is a union of P_H classes.
      if (!s.is_monoid()) continue;
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (p.same_class(a, b)) CHECK(h.contains(a) == h.contains(b));
        }
      }
    }
  }
}

TEST_CASE("quotient map is a homomorphism") {
  for (const auto& s : sample_semigroups()) {
    const auto n = s.order();
    for (const auto& ideal : enumerate_ideals(s)) {
      const auto p = principal_congruence(s, ideal);
      const auto q = quotient(s, p);
      CHECK(q.semigroup.order() == p.num_classes());
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          CHECK(q.class_map[s.mul(a, b)] == q.semigroup.mul(q.class_map[a], q.class_map[b]));
        }
      }
    }
  }
}

TEST_CASE("quotient rejects a non-congruence") {
  const auto z4 = zmod_mult(4);
  // {1, 2} cannot be a class: 1*2 = 2 but 2*2 = 0 lands outside 2's class.
  const auto p = Partition::from_classes(4, {{0}, {1, 2}, {3}});
  CHECK_FALSE(is_congruence(z4, p));
  CHECK_THROWS_AS(quotient(z4, p), Error);
}

TEST_CASE("iso_check") {
  CHECK(iso_check(table1(), table1()).has_value());
  CHECK_FALSE(iso_check(table1(), zmod_mult(3)).has_value());
  CHECK_FALSE(iso_check(zmod_mult(4), table2()).has_value());
  // relabel Z/5 by a random permutation and recover it
  const auto z5 = zmod_mult(5);
  std::vector<Elem> perm{3, 0, 4, 1, 2};
  std::vector<Elem> t(25);
  for (Elem a = 0; a < 5; ++a) {
    for (Elem b = 0; b < 5; ++b) t[perm[a] * 5 + perm[b]] = perm[z5.mul(a, b)];
  }
  const auto relabelled = CommSemigroup::validate(5, t);
  CHECK(iso_check(z5, relabelled).has_value());
}

TEST_CASE("restrict_to the nonzero part") {
  const auto t2 = table2();
  CHECK_THROWS_AS(restrict_to(t2, {lab(t2, "1"), lab(t2, "2"), lab(t2, "3")}), Error);
  const auto z3 = zmod_mult(3);
  const auto units = restrict_to(z3, {1, 2});
  CHECK(units.order() == 2);
  CHECK(units.identity().has_value());
}

TEST_CASE("subset parsing and formatting") {
  const auto s = table1();
  CHECK(parse_subset(s, "2,0") == labelled(s, {"2", "0"}));
  CHECK(parse_subset(s, "{}").empty());
  CHECK(format_subset(s, labelled(s, {"2", "0"})) == "{2,0}");
  CHECK_THROWS_AS(parse_subset(s, "7"), Error);
}

TEST_CASE("exhaustive enumeration counts match brute force") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(count_comm_semigroups(n) == oracle::count_tables_by_brute_force(n));
  }
  CHECK_THROWS_AS(count_comm_semigroups(5), Error);
}

TEST_CASE("random generator is seeded and yields valid tables") {
  RandomCommSemigroups a(6, 42);
  RandomCommSemigroups b(6, 42);
  for (int i = 0; i < 20; ++i) {
    const auto x = a.next();
    const auto y = b.next();
    CHECK(x == y);
    std::vector<Elem> t(x.raw_table().begin(), x.raw_table().end());
    CHECK_NOTHROW(CommSemigroup::validate(6, t));
  }
  CHECK_THROWS_AS(RandomCommSemigroups(9, 1), Error);
}
