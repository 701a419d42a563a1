#include "sepcong/tau.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sepcong/laws.hpp"

namespace sepcong {

bool tau_related(const Element& m, const Element& a, const Element& b) {
  return gcd(a, m) == gcd(b, m);
}

TauClasses tau_classes(const Element& m) {
  if (m.is_zero()) throw Error(Errc::ZeroModulus, "tau classes need a nonzero modulus");
  TauClasses out{m, is_unit(m), {}, {}, {}};
  const auto ring = ResidueRing::of(m);
  out.transversal = ring.transversal();
  std::vector<Element> keys;
  keys.reserve(out.transversal.size());
  for (const auto& r : out.transversal) keys.push_back(gcd(r, m));
  out.partition = Partition::from_keys(keys);
  for (Elem rep : out.partition.representatives()) out.divisors.push_back(keys[rep]);
  return out;
}

PjCongruence pj_congruence(const Element& m) {
  if (m.is_zero()) throw Error(Errc::ZeroModulus, "P_{J(0)} is not finitary");
  auto residues = residue_semigroup(m);
  ElementSet zero(residues.semigroup.order(), {0});
  auto p = principal_congruence(residues.semigroup, zero);
  return {std::move(residues), std::move(p)};
}

Verdict theorem3_check(const Element& m) {
  const auto tau = tau_classes(m);
  const auto pj = pj_congruence(m);
  if (!(tau.partition == pj.partition)) {
    for (Elem x = 0; x < tau.transversal.size(); ++x) {
      for (Elem y = x + 1; y < tau.transversal.size(); ++y) {
        if (tau.partition.same_class(x, y) != pj.partition.same_class(x, y)) {
          return Verdict::fail("tau-equals-P", {x, y}, "residues disagree");
        }
      }
    }
  }
  const auto q = quotient(pj.residues.semigroup, pj.partition);
  auto star = condition_star_check(q.semigroup);
  if (!star) {
    star.clause = "quotient-star/" + star.clause;
    return star;
  }
  return Verdict::ok(std::to_string(tau.partition.num_classes()) + " classes" +
                     (tau.unit_modulus ? " (unit modulus)" : ""));
}

Verdict separator_class_check(const Element& m) {
  if (m.is_zero()) throw Error(Errc::ZeroModulus, "separator class needs m != 0");
  if (is_unit(m)) throw Error(Errc::UnitModulus, "separator class needs a non-unit m");
  const auto pj = pj_congruence(m);
  const auto& sg = pj.residues.semigroup;
  const auto one = static_cast<Elem>(pj.residues.reduce(Element::one(m.domain())));
  const auto identity_class = pj.partition.class_set(pj.partition.class_of(one));

  ElementSet coprime(sg.order());
  const auto unit_gcd = Element::one(m.domain());
  for (Elem r = 0; r < sg.order(); ++r) {
    if (gcd(pj.residues.transversal[r], m) == unit_gcd) coprime.insert(r);
  }
  if (identity_class != coprime) {
    return Verdict::fail_with("identity-class-is-coprime", identity_class.members());
  }
  const auto sep = separator(sg, ElementSet(sg.order(), {0}));
  if (sep != coprime) return Verdict::fail_with("coprime-is-separator", sep.members());
  return Verdict::ok(std::to_string(coprime.count()) + " coprime residues");
}

std::size_t divisor_count(const Element& a) {
  if (is_unit(a)) return 1;
  return tau_classes(a).partition.num_classes();
}

Verdict dprime_coherence_check(const Element& m) {
  const auto tau = tau_classes(m);
  const auto pj = pj_congruence(m);
  const auto& sg = pj.residues.semigroup;
  const auto& residues = pj.residues.transversal;
  const std::size_t n = sg.order();
  const auto us = units(m.domain());

  // Orbits of the unit group on D/(m), keyed by their least residue.
  std::vector<std::size_t> orbit_key(n);
  for (Elem r = 0; r < n; ++r) {
    std::size_t least = r;
    for (const auto& u : us) least = std::min(least, pj.residues.reduce(u * residues[r]));
    orbit_key[r] = least;
  }
  const auto orbits = Partition::from_keys(orbit_key);

  for (Elem r = 0; r < n; ++r) {
    const auto c = static_cast<Elem>(pj.residues.reduce(canonical_associate(residues[r])));
    if (!tau.partition.same_class(r, c) || !pj.partition.same_class(r, c)) {
      return Verdict::fail("descends-along-phi", {r, c});
    }
    if (!orbits.same_class(r, c)) return Verdict::fail("canonical-in-orbit", {r, c});
    for (const auto& u : us) {
      const auto ur = static_cast<Elem>(pj.residues.reduce(u * residues[r]));
      if (!pj.partition.same_class(r, ur)) return Verdict::fail("associates-in-P", {r, ur});
    }
  }

  // The orbit monoid realizes D' modulo [m].
  if (!is_congruence(sg, orbits)) return Verdict::fail("orbits-congruence");
  const auto dprime = quotient(sg, orbits);
  const auto& ds = dprime.semigroup;
  const ElementSet zero_orbit(ds.order(), {dprime.class_map[0]});
  const auto pprime = principal_congruence(ds, zero_orbit);
  for (Elem r = 0; r < n; ++r) {
    for (Elem s = r + 1; s < n; ++s) {
      if (pj.partition.same_class(r, s) !=
          pprime.same_class(dprime.class_map[r], dprime.class_map[s])) {
        return Verdict::fail("P-mod-associates", {r, s});
      }
    }
  }

  // phi(Sep I) = Sep(phi(I))
  const auto sep = separator(sg, ElementSet(n, {0}));
  ElementSet image(ds.order());
  for (Elem r : sep.members()) image.insert(dprime.class_map[r]);
  if (image != separator(ds, zero_orbit)) return Verdict::fail("phi-separator");
  for (Elem r : sep.members()) {
    const auto c = static_cast<Elem>(pj.residues.reduce(canonical_associate(residues[r])));
    if (!sep.contains(c)) return Verdict::fail("canonical-separator", {r, c});
  }

  // tau' on canonical representatives of the orbits.
  const auto cm = canonical_associate(m);
  std::vector<Element> keys;
  for (Elem rep : orbits.representatives()) {
    keys.push_back(gcd(canonical_associate(residues[rep]), cm));
  }
  const auto tau_prime = Partition::from_keys(keys);
  if (!(tau_prime == pprime)) return Verdict::fail("tau-prime-equals-P-prime");
  if (tau_prime.num_classes() != pj.partition.num_classes()) {
    return Verdict::fail("class-count");
  }
  return Verdict::ok(std::to_string(ds.order()) + " associate classes of residues");
}

Verdict cr1_property_check(const Element& m, const std::vector<Triple>& triples) {
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& [a, b, s] = triples[i];
    if (!tau_related(m, a, b)) continue;
    ++applicable;
    if (!tau_related(m, s * a, s * b)) {
      return Verdict::fail("compatible", {i}, "triple " + std::to_string(i));
    }
  }
  return Verdict::ok(std::to_string(applicable) + " applicable triples");
}

namespace {

// About 25 elements per domain, zero included.
std::vector<Element> window(const DomainId& dom) {
  std::vector<Element> out;
  switch (dom.kind()) {
    case DomainId::Kind::Integers:
      for (int v = -12; v <= 12; ++v) out.push_back(Element::integer(v));
      break;
    case DomainId::Kind::PolyOverPrimeField: {
      const auto p = static_cast<std::size_t>(dom.prime());
      const std::size_t limit = std::min<std::size_t>(p * p, 25);
      for (std::size_t i = 0; i < limit; ++i) {
        PolyCoeffs c;
        for (std::size_t v = i; v > 0; v /= p) c.push_back(static_cast<std::uint32_t>(v % p));
        out.push_back(Element::poly(dom.prime(), std::move(c)));
      }
      break;
    }
    case DomainId::Kind::ImagQuadratic:
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) out.push_back(Element::quad(dom.d(), a, b));
      }
      break;
  }
  return out;
}

}  // namespace

SharpnessResult tau0_sharpness_check(const DomainId& dom) {
  const auto zero = Element::zero(dom);
  const auto w = window(dom);

  // First pair of nonzero non-units in the window that are not associated.
  std::optional<Element> a;
  std::optional<Element> b;
  for (const auto& x : w) {
    if (x.is_zero() || is_unit(x) || !(canonical_associate(x) == x)) continue;
    if (!a) {
      a = x;
    } else if (!associated(*a, x)) {
      b = x;
      break;
    }
  }
  if (!a || !b) return {Verdict::fail("no-witness"), zero, zero};

  if (tau_related(zero, *a, *b)) return {Verdict::fail("tau0-distinguishes"), *a, *b};
  for (const auto& x : w) {
    const auto xa = x * *a;
    const auto xb = x * *b;
    for (const auto& y : w) {
      if ((xa * y).is_zero() != (xb * y).is_zero()) {
        return {Verdict::fail("P0-identifies"), *a, *b};
      }
    }
  }
  return {Verdict::ok("tau_0 separates " + a->to_string() + " and " + b->to_string() +
                      "; P_{0} does not"),
          *a, *b};
}

std::vector<Element> random_poly_moduli(int p, int max_deg, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg_dist(1, max_deg);
  std::uniform_int_distribution<std::uint32_t> coeff(0, static_cast<std::uint32_t>(p - 1));
  std::vector<Element> out;
  while (out.size() < count) {
    const int deg = deg_dist(rng);
    PolyCoeffs c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[k] = coeff(rng);
    c[deg] = 1;
    out.push_back(Element::poly(p, std::move(c)));
  }
  return out;
}

std::vector<Element> random_quad_moduli(int d, long max_norm, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = quad_elements_up_to_norm(d, max_norm);
  std::vector<Element> candidates;
  for (const auto& x : pool) {
    if (!is_unit(x)) candidates.push_back(x);
  }
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::vector<Element> out;
  while (out.size() < count) out.push_back(candidates[pick(rng)]);
  return out;
}

}  // namespace sepcong
