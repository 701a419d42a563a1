#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepcong/generate.hpp"
#include "sepcong/laws.hpp"
#include "sepcong/quad_ideal.hpp"
#include "sepcong/table_io.hpp"
#include "sepcong/tau.hpp"

namespace sepcong::cli {

namespace {

using json = nlohmann::ordered_json;

struct Result {
  json data = json::object();
  std::ostringstream text;
  std::optional<json> failure;
};

json set_labels(const CommSemigroup& s, const ElementSet& a) {
  json out = json::array();
  for (Elem x : a.members()) out.push_back(s.label(x));
  return out;
}

json label_list(const CommSemigroup& s, const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(x < s.order() ? s.label(static_cast<Elem>(x)) : std::to_string(x));
  return out;
}

json element_list(const std::vector<Element>& transversal, const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (auto x : xs) {
    out.push_back(x < transversal.size() ? transversal[x].to_string(false) : std::to_string(x));
  }
  return out;
}

json failure_json(const std::string& check, const Verdict& v, json witness) {
  return json{{"check", check}, {"clause", v.clause}, {"witness", std::move(witness)},
              {"detail", v.detail}};
}

std::string residue_names(const std::vector<Element>& transversal, const std::vector<Elem>& cls) {
  std::string s;
  for (Elem r : cls) s += (s.empty() ? "" : " ") + transversal[r].to_string(false);
  return s;
}

Element parse_in(const std::string& domain, const std::string& text) {
  return Element::parse(text, DomainId::parse(domain));
}

// --- semigroup commands --------------------------------------------------------

void cmd_validate(const std::string& path, Result& r) {
  try {
    const auto s = read_table_file(path);
    const auto e = s.identity();
    const auto z = s.zero();
    r.data = {{"valid", true},
              {"order", s.order()},
              {"identity", e ? json(s.label(*e)) : json(nullptr)},
              {"zero", z ? json(s.label(*z)) : json(nullptr)}};
    r.text << "valid commutative semigroup of order " << s.order() << "\n"
           << "identity: " << (e ? s.label(*e) : "none") << "\n"
           << "zero: " << (z ? s.label(*z) : "none") << "\n";
  } catch (const Error& e) {
    if (e.code() != Errc::AssociativityViolation && e.code() != Errc::CommutativityViolation &&
        e.code() != Errc::IndexOutOfRange) {
      throw;
    }
    r.data = {{"valid", false}};
    r.text << "invalid table: " << e.what() << "\n";
    json w = json::array();
    for (auto x : e.witness()) w.push_back(x);
    r.failure = json{{"check", "validate"},
                     {"clause", std::string(errc_name(e.code()))},
                     {"witness", w},
                     {"detail", e.what()}};
  }
}

void cmd_sep(const std::string& path, const std::string& subset, Result& r) {
  const auto s = read_table_file(path);
  const auto a = parse_subset(s, subset);
  const auto id = idealizer(s, a);
  const auto idc = idealizer(s, a.complement());
  const auto sep = separator(s, a);
  r.data = {{"subset", set_labels(s, a)},
            {"idealizer", set_labels(s, id)},
            {"complement_idealizer", set_labels(s, idc)},
            {"separator", set_labels(s, sep)}};
  r.text << "A        = " << format_subset(s, a) << "\n"
         << "Id A     = " << format_subset(s, id) << "\n"
         << "Id(S\\A)  = " << format_subset(s, idc) << "\n"
         << "Sep A    = " << format_subset(s, sep) << "\n";
}

void cmd_pcong(const std::string& path, const std::string& subset, Result& r) {
  const auto s = read_table_file(path);
  const auto h = parse_subset(s, subset);
  const auto p = principal_congruence(s, h);
  json classes = json::array();
  r.text << "P_H for H = " << format_subset(s, h) << ": " << p.num_classes() << " classes\n";
  for (std::size_t c = 0; c < p.num_classes(); ++c) {
    const auto cls = p.class_set(c);
    classes.push_back(set_labels(s, cls));
    r.text << "  " << format_subset(s, cls) << "\n";
  }
  r.data = {{"subset", set_labels(s, h)}, {"classes", classes}};
}

json table_json(const CommSemigroup& s) {
  json rows = json::array();
  for (Elem a = 0; a < s.order(); ++a) {
    json row = json::array();
    for (Elem x : s.row(a)) row.push_back(x);
    rows.push_back(row);
  }
  json labels = json::array();
  for (Elem a = 0; a < s.order(); ++a) labels.push_back(s.label(a));
  return json{{"order", s.order()}, {"labels", labels}, {"table", rows}};
}

void cmd_quotient(const std::string& path, const std::string& subset, Result& r) {
  const auto s = read_table_file(path);
  const auto h = parse_subset(s, subset);
  const auto q = quotient(s, principal_congruence(s, h));
  r.data = table_json(q.semigroup);
  json map = json::array();
  for (Elem x = 0; x < s.order(); ++x) map.push_back(q.class_map[x]);
  r.data["class_map"] = map;
  r.text << format_table(q.semigroup);
}

void cmd_star(const std::string& path, Result& r) {
  const auto s = read_table_file(path);
  json anns = json::array();
  for (Elem x = 0; x < s.order(); ++x) {
    const auto ann = annihilator(s, x);
    anns.push_back(json{{"element", s.label(x)}, {"annihilator", set_labels(s, ann)}});
    if (s.zero()) r.text << "A(" << s.label(x) << ") = " << format_subset(s, ann) << "\n";
  }
  const auto v = condition_star_check(s);
  r.data = {{"pass", v.pass}, {"annihilators", s.zero() ? anns : json(nullptr)}};
  r.text << "condition (*): " << (v ? "PASS" : "FAIL " + v.clause) << "\n";
  if (!v) r.failure = failure_json("star", v, label_list(s, v.witness));
}

json report_json(const LawReport& report, const CommSemigroup& s, Result& r,
                 const std::string& check) {
  json results = json::array();
  for (const auto& lr : report.results) {
    results.push_back(json{{"law", lr.law},
                           {"instance", lr.instance},
                           {"pass", lr.verdict.pass},
                           {"clause", lr.verdict.clause},
                           {"detail", lr.verdict.detail}});
    if (!lr.verdict && !r.failure) {
      auto f = failure_json(check + "/" + lr.law, lr.verdict, label_list(s, lr.verdict.witness));
      f["instance"] = lr.instance;
      r.failure = f;
    }
  }
  return results;
}

void cmd_laws(const std::string& path, Result& r) {
  const auto s = read_table_file(path);
  const auto report = run_law_suite(s);
  r.data = {{"results", report_json(report, s, r, "laws")},
            {"checks", report.results.size()},
            {"failures", report.failures()}};
  for (const auto& lr : report.results) {
    r.text << (lr.verdict ? "PASS " : "FAIL ") << lr.law << " " << lr.instance;
    if (!lr.verdict.clause.empty()) r.text << " [" << lr.verdict.clause << "]";
    if (!lr.verdict.detail.empty()) r.text << " " << lr.verdict.detail;
    r.text << "\n";
  }
  r.text << report.results.size() << " checks, " << report.failures() << " failures\n";
}

void cmd_iso(const std::string& path1, const std::string& path2, Result& r) {
  const auto a = read_table_file(path1);
  const auto b = read_table_file(path2);
  const auto map = iso_check(a, b);
  r.data = {{"isomorphic", map.has_value()}};
  if (map) {
    json m = json::object();
    for (Elem x = 0; x < a.order(); ++x) {
      m[a.label(x)] = b.label((*map)[x]);
      r.text << a.label(x) << " -> " << b.label((*map)[x]) << "\n";
    }
    r.data["map"] = m;
    r.text << "isomorphic\n";
  } else {
    r.text << "not isomorphic\n";
    r.failure = failure_json("iso", Verdict::fail("not-isomorphic"), json::array());
  }
}

void cmd_census(std::size_t order, std::optional<std::uint64_t> seed,
                std::optional<std::size_t> count, Result& r) {
  if (count && !seed) throw CLI::ValidationError("census", "random sampling needs --seed");
  std::size_t semigroups = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  auto visit = [&](const CommSemigroup& s) {
    ++semigroups;
    const auto report = run_law_suite(s);
    checks += report.results.size();
    failures += report.failures();
    if (!r.failure) {
      for (const auto& lr : report.results) {
        if (lr.verdict) continue;
        auto f = failure_json("census/" + lr.law, lr.verdict, label_list(s, lr.verdict.witness));
        f["instance"] = lr.instance;
        f["table"] = format_table(s);
        r.failure = f;
        break;
      }
    }
  };
  if (count) {
    RandomCommSemigroups gen(order, *seed);
    for (std::size_t i = 0; i < *count; ++i) visit(gen.next());
  } else {
    for_each_comm_semigroup(order, visit);
  }
  r.data = {{"order", order},
            {"mode", count ? "random" : "exhaustive"},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"semigroups", semigroups},
            {"checks", checks},
            {"failures", failures}};
  r.text << (count ? "random" : "exhaustive") << " order " << order;
  if (seed) r.text << " seed " << *seed;
  r.text << ": " << semigroups << " semigroups, " << checks << " checks, " << failures
         << " failures\n";
}

// --- ring commands ---------------------------------------------------------------

void cmd_tau(const std::string& domain, const std::string& m_text, Result& r) {
  const auto m = parse_in(domain, m_text);
  const auto t = tau_classes(m);
  json divisors = json::array();
  json classes = json::array();
  const auto cls = t.partition.classes();
  r.text << "tau classes modulo " << m.to_string() << ": " << cls.size() << "\n";
  for (std::size_t c = 0; c < cls.size(); ++c) {
    divisors.push_back(t.divisors[c].to_string());
    classes.push_back(cls[c]);
    r.text << "  gcd " << t.divisors[c].to_string(false) << ": "
           << residue_names(t.transversal, cls[c]) << "\n";
  }
  r.data = {{"modulus", m.to_string()}, {"divisors", divisors}, {"classes", classes}};
}

void cmd_dcount(const std::string& domain, const std::string& a_text, const OracleCaps& caps,
                Result& r) {
  const auto a = parse_in(domain, a_text);
  const auto count = divisor_count(a);
  std::optional<std::size_t> oracle;
  try {
    oracle = factor_divisor_count_oracle(a, caps);
  } catch (const Error& e) {
    if (e.code() != Errc::SizeLimitExceeded) throw;
  }
  r.data = {{"element", a.to_string()},
            {"divisor_count", count},
            {"oracle", oracle ? json(*oracle) : json(nullptr)}};
  r.text << "d(" << a.to_string() << ") = " << count << "\n"
         << "trial division: " << (oracle ? std::to_string(*oracle) : "skipped (over caps)")
         << "\n";
  if (oracle && *oracle != count) {
    r.failure = failure_json("dcount", Verdict::fail("oracle-mismatch", {count, *oracle}),
                             json::array({count, *oracle}));
  }
}

void cmd_thm3(const std::string& domain, const std::string& m_text, Result& r) {
  const auto m = parse_in(domain, m_text);
  const auto transversal = enumerate_residues(m);
  json checks = json::array();
  auto record = [&](const std::string& name, const Verdict& v) {
    checks.push_back(json{{"name", name}, {"pass", v.pass}, {"clause", v.clause}, {"detail", v.detail}});
    r.text << (v ? "PASS " : "FAIL ") << name;
    if (!v.clause.empty()) r.text << " [" << v.clause << "]";
    if (!v.detail.empty()) r.text << " " << v.detail;
    r.text << "\n";
    if (!v && !r.failure) r.failure = failure_json(name, v, element_list(transversal, v.witness));
  };
  record("tau-equals-P", theorem3_check(m));
  if (!is_unit(m)) record("separator-class", separator_class_check(m));
  record("associate-classes", dprime_coherence_check(m));
  r.data = {{"modulus", m.to_string()}, {"residues", transversal.size()}, {"checks", checks}};
}

void cmd_ring(const std::string& domain, const std::string& m_text, Result& r) {
  const auto rs = residue_semigroup(parse_in(domain, m_text));
  r.data = table_json(rs.semigroup);
  r.data["modulus"] = rs.modulus.to_string();
  r.text << format_table(rs.semigroup);
}

void cmd_sharp(const std::string& domain, Result& r) {
  const auto res = tau0_sharpness_check(DomainId::parse(domain));
  r.data = {{"domain", DomainId::parse(domain).to_string()},
            {"pass", res.verdict.pass},
            {"a", res.a.to_string()},
            {"b", res.b.to_string()},
            {"detail", res.verdict.detail}};
  r.text << (res.verdict ? "PASS " : "FAIL " + res.verdict.clause + " ") << res.verdict.detail
         << "\n";
  if (!res.verdict) {
    r.failure = failure_json("sharp", res.verdict, json::array({res.a.to_string(), res.b.to_string()}));
  }
}

// Big integers go out as numbers when they fit, so small HNFs read naturally.
json number(const Bigint& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json hnf_numbers(const QuadIdeal& a) {
  const auto h = a.hnf();
  return json::array({json::array({number(h[0][0]), number(h[0][1])}),
                      json::array({number(h[1][0]), number(h[1][1])})});
}

void cmd_qideal(const std::vector<std::string>& args, bool verify, Result& r) {
  if (args.empty()) throw CLI::ValidationError("qideal", "expected <d> <gens...> or ideal(d; ...)");
  IdealInput input;
  if (args.size() == 1 && args[0].find('(') != std::string::npos &&
      args[0].find(';') != std::string::npos) {
    input = parse_ideal_input(args[0]);
  } else {
    if (args.size() < 2) throw CLI::ValidationError("qideal", "expected <d> <gens...>");
    try {
      std::size_t used = 0;
      input.d = std::stoi(args[0], &used);
      if (used != args[0].size()) throw std::invalid_argument(args[0]);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad discriminant parameter '" + args[0] + "'");
    }
    const auto dom = DomainId::quadratic(input.d);
    for (std::size_t i = 1; i < args.size(); ++i) input.gens.push_back(Element::parse(args[i], dom));
  }
  const auto a = QuadIdeal::from_generators(input.d, input.gens);
  const auto m = principal_generator(a);
  const auto aa = ideal_mul(a, conjugate(a));
  const auto n = principal_generator(aa);
  r.data = {{"d", input.d},
            {"hnf", hnf_numbers(a)},
            {"norm", number(a.norm())},
            {"generator", m.to_string()},
            {"conjugate_product", json{{"hnf", hnf_numbers(aa)}, {"generator", n.to_string()}}}};
  r.text << "A        = " << a.to_string() << "\n"
         << "N(A)     = " << a.norm().get_str() << "\n"
         << "A = (m),   m = " << m.to_string() << "\n"
         << "A*conj(A) = " << aa.to_string() << " = (" << n.to_string(false) << ")\n";
  if (verify) {
    const auto res = ideal_chain_check(input.d, input.gens);
    r.data["verify"] = json{{"pass", res.verdict.pass}, {"clause", res.verdict.clause},
                            {"detail", res.verdict.detail}};
    r.text << (res.verdict ? "PASS " : "FAIL " + res.verdict.clause + " ") << res.verdict.detail
           << "\n";
    if (!res.verdict) {
      r.failure = failure_json("qideal", res.verdict,
                               element_list(a.residues().transversal(), res.verdict.witness));
    }
  }
}

void cmd_pool(const std::string& domain, std::size_t count, std::optional<std::uint64_t> seed,
              const OracleCaps& caps, Result& r) {
  if (!seed) throw CLI::ValidationError("pool", "--seed is required");
  const auto dom = DomainId::parse(domain);
  std::vector<Element> pool;
  switch (dom.kind()) {
    case DomainId::Kind::Integers: {
      std::mt19937_64 rng(*seed);
      std::uniform_int_distribution<long> pick(2, caps.max_abs.get_si());
      while (pool.size() < count) pool.push_back(Element::integer(pick(rng)));
      break;
    }
    case DomainId::Kind::PolyOverPrimeField:
      pool = random_poly_moduli(dom.prime(), caps.max_deg, count, *seed);
      break;
    case DomainId::Kind::ImagQuadratic:
      pool = random_quad_moduli(dom.d(), caps.max_norm.get_si(), count, *seed);
      break;
  }
  json elems = json::array();
  for (const auto& x : pool) {
    elems.push_back(x.to_string(false));
    r.text << x.to_string(false) << "\n";
  }
  r.data = {{"domain", dom.to_string()}, {"seed", *seed}, {"elements", elems}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separator congruences of commutative semigroups and the gcd relation in UFDs",
               "sepcong"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  long max_abs = 1000000;
  int max_deg = 8;
  long max_norm = 10000;
  app.add_option("--max-abs", max_abs, "Integer bound for trial division and pools")
      ->capture_default_str();
  app.add_option("--max-deg", max_deg, "Degree bound for trial division and pools")
      ->capture_default_str();
  app.add_option("--max-norm", max_norm, "Norm bound for trial division and pools")
      ->capture_default_str();

  std::string table, table2, subset, domain, elem;
  std::vector<std::string> qargs;
  bool verify = false;
  std::size_t order = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::size_t pool_count = 10;

  auto* validate = app.add_subcommand("validate", "Load and validate a Cayley table");
  validate->add_option("table", table)->required();
  auto* sep = app.add_subcommand("sep", "Idealizers and separator of a subset");
  sep->add_option("table", table)->required();
  sep->add_option("subset", subset)->required();
  auto* pcong = app.add_subcommand("pcong", "Classes of the principal congruence P_H");
  pcong->add_option("table", table)->required();
  pcong->add_option("subset", subset)->required();
  auto* quot = app.add_subcommand("quotient", "Quotient by P_H, printed as a table file");
  quot->add_option("table", table)->required();
  quot->add_option("subset", subset)->required();
  auto* star = app.add_subcommand("star", "Annihilators and condition (*)");
  star->add_option("table", table)->required();
  auto* laws = app.add_subcommand("laws", "Run the structural law checks on a table");
  laws->add_option("table", table)->required();
  auto* iso = app.add_subcommand("iso", "Isomorphism test between two tables");
  iso->add_option("table", table)->required();
  iso->add_option("other", table2)->required();
  auto* census = app.add_subcommand("census", "Law checks over generated semigroups");
  census->add_option("--order", order)->required()->check(CLI::Range(1, 8));
  census->add_option("--seed", seed);
  census->add_option("--count", count);

  auto* tau = app.add_subcommand("tau", "gcd classes of residues modulo m");
  tau->add_option("domain", domain)->required();
  tau->add_option("m", elem)->required();
  auto* dcount = app.add_subcommand("dcount", "Number of non-associated divisors");
  dcount->add_option("domain", domain)->required();
  dcount->add_option("a", elem)->required();
  auto* thm3 = app.add_subcommand("thm3", "tau_m against P_J(m), separator class, associates");
  thm3->add_option("domain", domain)->required();
  thm3->add_option("m", elem)->required();
  auto* ring = app.add_subcommand("ring", "Multiplicative table of D/(m) as a table file");
  ring->add_option("domain", domain)->required();
  ring->add_option("m", elem)->required();
  auto* sharp = app.add_subcommand("sharp", "tau_0 against P_{0} on a window of elements");
  sharp->add_option("domain", domain)->required();
  auto* qideal = app.add_subcommand("qideal", "HNF, generator and A*conj(A) of an ideal");
  qideal->add_option("args", qargs, "<d> <gens...> or ideal(d; g1, g2)")->required();
  qideal->add_flag("--verify", verify, "Also run the full residue-level check");
  auto* pool = app.add_subcommand("pool", "Seeded random moduli, one per line");
  pool->add_option("domain", domain)->required();
  pool->add_option("--count", pool_count)->capture_default_str();
  pool->add_option("--seed", seed);

  std::vector<const char*> args(argv, argv + argc);
  try {
    app.parse(static_cast<int>(args.size()), const_cast<char**>(args.data()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const OracleCaps caps{max_abs, max_deg, max_norm};
  Result r;
  try {
    if (*validate) cmd_validate(table, r);
    if (*sep) cmd_sep(table, subset, r);
    if (*pcong) cmd_pcong(table, subset, r);
    if (*quot) cmd_quotient(table, subset, r);
    if (*star) cmd_star(table, r);
    if (*laws) cmd_laws(table, r);
    if (*iso) cmd_iso(table, table2, r);
    if (*census) cmd_census(order, seed, count, r);
    if (*tau) cmd_tau(domain, elem, r);
    if (*dcount) cmd_dcount(domain, elem, caps, r);
    if (*thm3) cmd_thm3(domain, elem, r);
    if (*ring) cmd_ring(domain, elem, r);
    if (*sharp) cmd_sharp(domain, r);
    if (*qideal) cmd_qideal(qargs, verify, r);
    if (*pool) cmd_pool(domain, pool_count, seed, caps, r);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "json") {
    if (r.failure) r.data["failure"] = *r.failure;
    out << r.data.dump(2) << "\n";
  } else {
    out << r.text.str();
    if (r.failure) out << "witness: " << r.failure->dump() << "\n";
  }
  return r.failure ? 1 : 0;
}

}  // namespace sepcong::cli
