#include "sepcong/laws.hpp"

#include <algorithm>

namespace sepcong {

Verdict condition_star_check(const CommSemigroup& s) {
  const auto e = s.identity();
  const auto z = s.zero();
  if (!e || !z) return Verdict::fail("monoid-with-zero", {}, !e ? "no identity" : "no zero");

  std::vector<ElementSet> ann;
  ann.reserve(s.order());
  for (Elem x = 0; x < s.order(); ++x) ann.push_back(annihilator(s, x));

  for (Elem x = 0; x < s.order(); ++x) {
    if (x != *e && ann[x].count() == 1) {
      return Verdict::fail("torsion", {x}, "non-identity element with A(s) = {0}");
    }
  }
  for (Elem x = 0; x < s.order(); ++x) {
    for (Elem y = x + 1; y < s.order(); ++y) {
      if (ann[x] == ann[y]) {
        return Verdict::fail("annihilator-injective", {x, y}, "A(s) = A(t) with s != t");
      }
    }
  }
  return Verdict::ok();
}

Verdict natural_order_check(const CommSemigroup& s) {
  if (!s.identity()) throw Error(Errc::NoIdentity, "natural order needs a monoid");
  std::vector<ElementSet> translates;
  for (Elem a = 0; a < s.order(); ++a) {
    ElementSet as(s.order());
    for (Elem x : s.row(a)) as.insert(x);
    translates.push_back(std::move(as));
  }
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = a + 1; b < s.order(); ++b) {
      if (translates[a] == translates[b]) {
        return Verdict::fail("antisymmetry", {a, b}, "aS = bS with a != b");
      }
    }
  }
  return Verdict::ok();
}

Verdict torsion_ideal_check(const CommSemigroup& s) {
  const auto t = torsion_set(s);
  for (Elem x : t.members()) {
    for (Elem y = 0; y < s.order(); ++y) {
      if (!t.contains(s.mul(y, x))) return Verdict::fail("torsion-ideal", {x, y});
    }
  }
  return Verdict::ok();
}

Verdict theorem1_forward_check(const CommSemigroup& c, const ElementSet& ideal) {
  if (!is_ideal(c, ideal)) throw Error(Errc::NotAnIdeal, "forward check needs an ideal");
  const auto sep = separator(c, ideal);
  if (sep.empty()) throw Error(Errc::EmptySeparator, "Sep I is empty");

  const auto p = principal_congruence(c, ideal);
  const Elem i0 = ideal.members().front();
  const Elem s0 = sep.members().front();
  if (p.class_set(p.class_of(i0)) != ideal) {
    return Verdict::fail("ideal-is-class", {i0}, "I is not a single P_I-class");
  }
  if (p.class_set(p.class_of(s0)) != sep) {
    return Verdict::fail("separator-is-class", {s0}, "Sep I is not a single P_I-class");
  }
  const auto q = quotient(c, p);
  if (q.semigroup.zero() != q.class_map[i0]) {
    return Verdict::fail("ideal-is-zero", {i0}, "I is not the zero of C/P_I");
  }
  if (q.semigroup.identity() != q.class_map[s0]) {
    return Verdict::fail("separator-is-identity", {s0}, "Sep I is not the identity of C/P_I");
  }
  auto star = condition_star_check(q.semigroup);
  if (!star) {
    star.clause = "quotient-star/" + star.clause;
    return star;
  }
  return Verdict::ok(std::to_string(p.num_classes()) + " classes");
}

Verdict theorem1_converse_check(const CommSemigroup& c, const Partition& alpha) {
  if (!is_congruence(c, alpha)) throw Error(Errc::NotACongruence, "alpha is not a congruence");
  const auto q = quotient(c, alpha);
  if (!condition_star_check(q.semigroup)) {
    throw Error(Errc::QuotientNotStar, "C/alpha does not satisfy condition (*)");
  }
  const auto ideal = alpha.class_set(*q.semigroup.zero());
  const auto identity_class = alpha.class_set(*q.semigroup.identity());
  if (!is_ideal(c, ideal)) return Verdict::fail_with("zero-class-ideal", ideal.members());
  if (separator(c, ideal) != identity_class) {
    return Verdict::fail_with("separator-is-identity-class", identity_class.members());
  }
  if (principal_congruence(c, ideal) != alpha) {
    return Verdict::fail_with("alpha-equals-P_I", ideal.members());
  }
  return Verdict::ok("I has " + std::to_string(ideal.count()) + " elements");
}

Verdict theorem2_check(const CommSemigroup& s, const ElementSet& maximal) {
  const auto maxes = maximal_ideals(s);
  if (std::find(maxes.begin(), maxes.end(), maximal) == maxes.end()) {
    throw Error(Errc::NotMaximal, "M is not a maximal ideal");
  }
  const bool prime = is_prime_ideal(s, maximal);
  const bool sep_nonempty = !separator(s, maximal).empty();
  const auto q = quotient(s, principal_congruence(s, maximal)).semigroup;
  const bool two_element = q.order() == 2 && q.identity() && q.zero() && *q.identity() != *q.zero();
  if (prime == sep_nonempty && sep_nonempty == two_element) {
    return Verdict::ok(prime ? "all three hold" : "all three fail");
  }
  return Verdict::fail_with("equivalence", maximal.members(),
                       std::string("prime=") + (prime ? "1" : "0") + " sep=" +
                           (sep_nonempty ? "1" : "0") + " two=" + (two_element ? "1" : "0"));
}

Verdict strip_zero_check(const CommSemigroup& c, const ElementSet& ideal) {
  const auto z = c.zero();
  if (!z) throw Error(Errc::NoZeroElement, "zero stripping needs a zero");
  std::vector<Elem> nonzero;
  for (Elem x = 0; x < c.order(); ++x) {
    if (x != *z) nonzero.push_back(x);
  }
  for (Elem x : nonzero) {
    for (Elem y : nonzero) {
      if (c.mul(x, y) == *z) {
        throw Error(Errc::NonzeroNotClosed, "nonzero elements are not closed", {x, y});
      }
    }
  }
  if (!is_ideal(c, ideal) || (ideal.count() == 1 && ideal.contains(*z))) {
    throw Error(Errc::NotAnIdeal, "need an ideal other than {0}");
  }

  const auto cstar = restrict_to(c, nonzero);
  ElementSet istar(cstar.order());
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (ideal.contains(nonzero[i])) istar.insert(static_cast<Elem>(i));
  }
  if (!is_ideal(cstar, istar)) return Verdict::fail_with("I*-ideal", istar.members());

  const auto p = principal_congruence(c, ideal);
  const auto pstar = principal_congruence(cstar, istar);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (p.same_class(nonzero[i], nonzero[j]) !=
          pstar.same_class(static_cast<Elem>(i), static_cast<Elem>(j))) {
        return Verdict::fail("restriction", {nonzero[i], nonzero[j]});
      }
    }
  }
  if (!iso_check(quotient(c, p).semigroup, quotient(cstar, pstar).semigroup)) {
    return Verdict::fail("quotients-isomorphic");
  }
  return Verdict::ok();
}

std::size_t LawReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const LawResult& r) { return !r.verdict.pass; }));
}

void LawReport::merge(const LawReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

LawReport run_law_suite(const CommSemigroup& s) {
  LawReport report;
  auto record = [&](std::string law, std::string instance, Verdict v) {
    report.results.push_back({std::move(law), std::move(instance), std::move(v)});
  };
  const std::size_t n = s.order();

  if (s.zero() && n >= 2) record("torsion-ideal", "S", torsion_ideal_check(s));
  if (condition_star_check(s)) record("star-implies-natural-order", "S", natural_order_check(s));

  const auto ideals = enumerate_ideals(s);
  for (const auto& i : ideals) {
    if (!separator(s, i).empty()) {
      record("theorem1-forward", format_subset(s, i), theorem1_forward_check(s, i));
    }
  }

  if (n <= kConverseSubsetMaxOrder) {
    std::vector<Partition> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      ElementSet h(n);
      for (Elem x = 0; x < n; ++x) {
        if (mask >> x & 1U) h.insert(x);
      }
      auto p = principal_congruence(s, h);
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      if (!condition_star_check(quotient(s, p).semigroup)) continue;
      record("theorem1-converse", "P_" + format_subset(s, h), theorem1_converse_check(s, p));
    }
  }

  for (const auto& m : maximal_ideals(s)) {
    record("theorem2", format_subset(s, m), theorem2_check(s, m));
  }

  if (const auto z = s.zero(); z && n >= 2) {
    bool closed = true;
    for (Elem x = 0; x < n && closed; ++x) {
      for (Elem y = 0; y < n && closed; ++y) {
        closed = x == *z || y == *z || s.mul(x, y) != *z;
      }
    }
    if (closed) {
      for (const auto& i : ideals) {
        if (i.count() == 1 && i.contains(*z)) continue;
        record("strip-zero", format_subset(s, i), strip_zero_check(s, i));
      }
    }
  }
  return report;
}

}  // namespace sepcong
