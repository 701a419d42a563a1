#include "sepcong/quad_ideal.hpp"
#include "sepcong/tau.hpp"

namespace sepcong {

IdealChainResult ideal_chain_check(int d, std::span<const Element> gens) {
  const auto ideal = QuadIdeal::from_generators(d, gens);
  const auto m = principal_generator(ideal);
  const auto norm_ideal = ideal_mul(ideal, conjugate(ideal));
  const auto n = principal_generator(norm_ideal);
  IdealChainResult out{Verdict::ok(), ideal, m, norm_ideal, n};

  const std::array<Element, 1> m_gen{m};
  if (!(QuadIdeal::from_generators(d, m_gen) == ideal)) {
    out.verdict = Verdict::fail("generator-round-trip");
    return out;
  }

  // P_A computed on the residues of A itself, independent of m.
  const auto ring = ideal.residues();
  const auto table = ring.multiplicative_semigroup();
  const auto p_a = principal_congruence(table, ElementSet(table.order(), {0}));
  const auto tau = tau_classes(m);
  if (!(tau.transversal == ring.transversal()) || !(tau.partition == p_a)) {
    out.verdict = Verdict::fail("P_A-equals-tau_m");
    return out;
  }
  if (auto v = theorem3_check(m); !v) {
    v.clause = "theorem3(m)/" + v.clause;
    out.verdict = v;
    return out;
  }

  const auto& nq = n.as_quad();
  if (nq.b != 0 || nq.a <= 0) {
    out.verdict = Verdict::fail("norm-generator-rational", {}, n.to_string());
    return out;
  }
  if (nq.a != ideal.norm()) {
    out.verdict = Verdict::fail("norm-generator-is-N(A)", {}, n.to_string());
    return out;
  }
  if (auto v = theorem3_check(n); !v) {
    v.clause = "theorem3(n)/" + v.clause;
    out.verdict = v;
    return out;
  }
  out.verdict.detail = "m = " + m.to_string() + ", n = " + nq.a.get_str();
  return out;
}

}  // namespace sepcong
