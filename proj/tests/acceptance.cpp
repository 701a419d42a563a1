// Acceptance suite: one PASS/FAIL line per criterion with timing and seeds.
// All comparisons are exact. Exit status is nonzero if any criterion fails.
//
//   sepcong_acceptance [--seed N] [--data DIR]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sepcong/generate.hpp"
#include "sepcong/laws.hpp"
#include "sepcong/quad_ideal.hpp"
#include "sepcong/table_io.hpp"
#include "sepcong/tau.hpp"

using namespace sepcong;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

struct Pools {
  std::vector<Element> moduli;
  std::string seeds;
};

// Criterion 4 pools, shared with 5 and 9.
Pools theorem3_pools(std::uint64_t seed) {
  Pools out;
  for (long m = 2; m <= 200; ++m) out.moduli.push_back(Element::integer(m));
  std::ostringstream seeds;
  const int primes[] = {2, 3, 5};
  for (int i = 0; i < 3; ++i) {
    const auto s = seed + 100 + static_cast<std::uint64_t>(i);
    seeds << "F" << primes[i] << "=" << s << " ";
    for (auto& m : random_poly_moduli(primes[i], 4, 10, s)) out.moduli.push_back(m);
  }
  for (std::size_t i = 0; i < kHeegnerValues.size(); ++i) {
    const auto s = seed + 200 + i;
    seeds << "Q(" << kHeegnerValues[i] << ")=" << s << " ";
    for (auto& m : random_quad_moduli(kHeegnerValues[i], 300, 20, s)) out.moduli.push_back(m);
  }
  out.seeds = seeds.str();
  out.seeds.pop_back();
  return out;
}

Outcome criterion1(const std::string& data) {
  const auto s = read_table_file(data + "/table1.txt");
  if (!condition_star_check(s)) return fail("condition (*) fails");
  const auto one = *s.find_label("1");
  const auto two = *s.find_label("2");
  const auto zero = *s.find_label("0");
  if (s.identity() != one || s.zero() != zero) return fail("identity/zero");
  if (annihilator(s, one) != ElementSet(3, {zero})) return fail("A(1)");
  if (annihilator(s, two) != ElementSet(3, {two, zero})) return fail("A(2)");
  if (!annihilator(s, zero).is_full()) return fail("A(0)");
  return {true, "A(1)={0} A(2)={2,0} A(0)=S"};
}

Outcome criterion2(const std::string& data) {
  const auto pj = pj_congruence(Element::integer(6));
  if (pj.partition.num_classes() != 4) return fail("P_J(6) class count");
  const auto q = quotient(pj.residues.semigroup, pj.partition);
  if (!iso_check(q.semigroup, read_table_file(data + "/table2.txt"))) return fail("not isomorphic");
  if (divisor_count(Element::integer(6)) != 4) return fail("d(6)");
  return {true, "4 classes, quotient ~ table 2, d(6)=4"};
}

Outcome criterion3() {
  const auto dom = DomainId::poly(5);
  const auto f = Element::parse("x^3+2x^2+4x+3", dom);
  const auto product = Element::parse("x-1", dom) * Element::parse("x+1", dom) *
                       Element::parse("x+2", dom);
  if (!(f == product)) return fail("factorization");
  const auto d = divisor_count(f);
  const auto oracle = factor_divisor_count_oracle(f);
  if (d != 8 || oracle != 8) return fail("d=" + std::to_string(d) + " oracle=" + std::to_string(oracle));
  return {true, "d(f)=8, trial division 8"};
}

Outcome over_pool(const Pools& pools, const std::function<Verdict(const Element&)>& check) {
  for (const auto& m : pools.moduli) {
    const auto v = check(m);
    if (!v) return fail(m.to_string() + ": " + v.clause);
  }
  return {true, std::to_string(pools.moduli.size()) + " moduli"};
}

Outcome criterion6(std::uint64_t seed, std::string& seeds) {
  std::vector<Element> xs;
  std::mt19937_64 rng(seed + 300);
  std::uniform_int_distribution<long> ints(1, 10000);
  for (int i = 0; i < 100; ++i) xs.push_back(Element::integer(ints(rng)));

  std::mt19937_64 prng(seed + 301);
  std::uniform_int_distribution<int> deg(1, 4);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 4);
  std::uniform_int_distribution<std::uint32_t> lead(1, 4);
  for (int i = 0; i < 50; ++i) {
    PolyCoeffs c(static_cast<std::size_t>(deg(prng)) + 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] = coeff(prng);
    c.back() = lead(prng);
    xs.push_back(Element::poly(5, c));
  }

  for (int d : {-1, -3}) {
    const auto pool = quad_elements_up_to_norm(d, 500);
    std::mt19937_64 qrng(seed + 302 + static_cast<std::uint64_t>(-d));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 25; ++i) xs.push_back(pool[pick(qrng)]);
  }
  seeds = "int=" + std::to_string(seed + 300) + " F5=" + std::to_string(seed + 301) +
          " Q(-1)=" + std::to_string(seed + 303) + " Q(-3)=" + std::to_string(seed + 305);

  for (const auto& x : xs) {
    const auto d = divisor_count(x);
    const auto o = factor_divisor_count_oracle(x);
    if (d != o) {
      return fail(x.to_string() + ": " + std::to_string(d) + " vs " + std::to_string(o));
    }
  }
  return {true, std::to_string(xs.size()) + " elements"};
}

Outcome criterion7(std::uint64_t seed, std::string& seeds) {
  std::size_t semigroups = 0;
  std::size_t checks = 0;
  Outcome out;
  auto visit = [&](const CommSemigroup& s) {
    ++semigroups;
    const auto report = run_law_suite(s);
    checks += report.results.size();
    if (out.pass && !report.all_pass()) {
      for (const auto& r : report.results) {
        if (!r.verdict) {
          out = fail(r.law + " on " + r.instance + " [" + r.verdict.clause + "]\n" + format_table(s));
          break;
        }
      }
    }
  };
  for (std::size_t n = 1; n <= kExhaustiveMaxOrder; ++n) for_each_comm_semigroup(n, visit);
  for (std::size_t n = 5; n <= 6; ++n) {
    RandomCommSemigroups gen(n, seed + 400 + n);
    for (int i = 0; i < 500; ++i) visit(gen.next());
  }
  seeds = "order5=" + std::to_string(seed + 405) + " order6=" + std::to_string(seed + 406);
  if (out.pass) {
    out.note = std::to_string(semigroups) + " semigroups, " + std::to_string(checks) + " checks";
  }
  return out;
}

// Ideal norms are kept at most 64: the check also compares tau_n with P_J(n)
// for the rational n = N(A), whose residue ring has n^2 elements.
Outcome criterion8(std::uint64_t seed, std::string& seeds) {
  constexpr long kMaxIdealNorm = 64;
  std::size_t done = 0;
  for (std::size_t i = 0; i < kHeegnerValues.size(); ++i) {
    const int d = kHeegnerValues[i];
    std::mt19937_64 rng(seed + 500 + i);
    std::uniform_int_distribution<long> c(-8, 8);
    int found = 0;
    while (found < 10) {
      const std::vector<Element> gens{Element::quad(d, c(rng), c(rng)),
                                      Element::quad(d, c(rng), c(rng))};
      if (gens[0].is_zero() || gens[1].is_zero()) continue;
      if (QuadIdeal::from_generators(d, gens).norm() > kMaxIdealNorm) continue;
      const auto r = ideal_chain_check(d, gens);
      if (!r.verdict) {
        return fail(r.ideal.to_string() + ": " + r.verdict.clause + " " + r.verdict.detail);
      }
      ++found;
      ++done;
    }
  }
  seeds = "Q(d)=" + std::to_string(seed + 500) + "+i";
  return {true, std::to_string(done) + " ideals"};
}

Outcome criterion10() {
  std::vector<DomainId> doms{DomainId::integers(), DomainId::poly(2), DomainId::poly(3),
                             DomainId::poly(5)};
  for (int d : kHeegnerValues) doms.push_back(DomainId::quadratic(d));
  for (const auto& dom : doms) {
    const auto r = tau0_sharpness_check(dom);
    if (!r.verdict) return fail(dom.to_string() + ": " + r.verdict.clause);
  }
  return {true, std::to_string(doms.size()) + " domains"};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  std::string data = SEPCONG_TEST_DATA;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") {
      seed = std::strtoull(argv[i + 1], nullptr, 10);
    } else if (flag == "--data") {
      data = argv[i + 1];
    } else {
      std::cerr << "usage: sepcong_acceptance [--seed N] [--data DIR]\n";
      return 2;
    }
  }
  std::cout << "base seed " << seed << "\n";

  int failures = 0;
  auto criterion = [&](int id, const char* name, double limit_ms,
                       const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && ms > limit_ms) o = fail("over time limit");
    if (!o.pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << name << " | "
         << o.note << " | " << ms << " ms (limit " << limit_ms << " ms)";
    std::cout << line.str() << std::endl;
  };

  criterion(1, "table 1 fixture", 1.0, [&] { return criterion1(data); });
  criterion(2, "P_J(6) and table 2", 10.0, [&] { return criterion2(data); });
  criterion(3, "F5[x] divisor count", 1000.0, [] { return criterion3(); });

  Pools pools;
  // Criteria 4, 5 and 9 share the pools; 5 and 9 are timed separately
  // against the same bundled 60 s budget.
  criterion(4, "tau_m = P_J(m)", 60000.0, [&] {
    pools = theorem3_pools(seed);
    return over_pool(pools, theorem3_check);
  });
  std::cout << "  pool seeds " << pools.seeds << "\n";
  criterion(5, "separator class", 60000.0, [&] { return over_pool(pools, separator_class_check); });

  std::string seeds6;
  criterion(6, "divisor counts vs trial division", 30000.0, [&] {
    auto o = criterion6(seed, seeds6);
    o.note += " | seeds " + seeds6;
    return o;
  });
  std::string seeds7;
  criterion(7, "structural laws, orders <= 6", 300000.0, [&] {
    auto o = criterion7(seed, seeds7);
    o.note += " | seeds " + seeds7;
    return o;
  });
  std::string seeds8;
  criterion(8, "quadratic ideals", 60000.0, [&] {
    auto o = criterion8(seed, seeds8);
    o.note += " | seeds " + seeds8;
    return o;
  });
  criterion(9, "associate classes", 60000.0, [&] { return over_pool(pools, dprime_coherence_check); });
  criterion(10, "tau_0 sharpness", 10.0, [] { return criterion10(); });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL")
            << "\n";
  return failures == 0 ? 0 : 1;
}
