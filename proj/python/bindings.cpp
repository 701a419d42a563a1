#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepcong/generate.hpp"
#include "sepcong/laws.hpp"
#include "sepcong/quad_ideal.hpp"
#include "sepcong/table_io.hpp"
#include "sepcong/tau.hpp"

namespace py = pybind11;
using namespace sepcong;

namespace {

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["pass"] = v.pass;
  d["clause"] = v.clause;
  d["witness"] = v.witness;
  d["detail"] = v.detail;
  return d;
}

ElementSet to_set(const CommSemigroup& s, const std::vector<Elem>& xs) {
  for (Elem x : xs) {
    if (x >= s.order()) throw Error(Errc::IndexOutOfRange, "element " + std::to_string(x));
  }
  return ElementSet(s.order(), std::span<const Elem>(xs));
}

std::vector<std::vector<Elem>> rows_of(const CommSemigroup& s) {
  std::vector<std::vector<Elem>> rows;
  for (Elem a = 0; a < s.order(); ++a) rows.emplace_back(s.row(a).begin(), s.row(a).end());
  return rows;
}

std::string bigint_str(const Bigint& x) { return x.get_str(); }

py::dict ideal_dict(const QuadIdeal& a) {
  py::dict d;
  d["d"] = a.d();
  const auto h = a.hnf();
  d["hnf"] = std::vector<std::vector<std::string>>{{bigint_str(h[0][0]), bigint_str(h[0][1])},
                                                   {bigint_str(h[1][0]), bigint_str(h[1][1])}};
  d["norm"] = py::int_(py::str(bigint_str(a.norm())));
  return d;
}

}  // namespace

PYBIND11_MODULE(sepcong, m) {
  m.doc() = "Separator congruences of finite commutative semigroups and gcd classes in UFDs";

  py::register_exception<Error>(m, "SepcongError", PyExc_ValueError);

  py::class_<CommSemigroup>(m, "Semigroup")
      .def(py::init([](const std::vector<std::vector<Elem>>& rows, std::vector<std::string> labels) {
             return CommSemigroup::validate(rows, std::move(labels));
           }),
           py::arg("rows"), py::arg("labels") = std::vector<std::string>{})
      .def_static("parse", &parse_table, py::arg("text"))
      .def_static("load", &read_table_file, py::arg("path"))
      .def_property_readonly("order", &CommSemigroup::order)
      .def_property_readonly("identity", &CommSemigroup::identity)
      .def_property_readonly("zero", &CommSemigroup::zero)
      .def_property_readonly("labels", &CommSemigroup::labels)
      .def("label", &CommSemigroup::label)
      .def("mul", &CommSemigroup::mul)
      .def("rows", &rows_of)
      .def("__str__", &format_table)
      .def("__eq__", [](const CommSemigroup& a, const CommSemigroup& b) { return a == b; });

  m.def("is_ideal", [](const CommSemigroup& s, const std::vector<Elem>& a) {
    return is_ideal(s, to_set(s, a));
  });
  m.def("idealizer", [](const CommSemigroup& s, const std::vector<Elem>& a) {
    return idealizer(s, to_set(s, a)).members();
  });
  m.def("separator", [](const CommSemigroup& s, const std::vector<Elem>& a) {
    return separator(s, to_set(s, a)).members();
  });
  m.def("enumerate_ideals", [](const CommSemigroup& s) {
    std::vector<std::vector<Elem>> out;
    for (const auto& i : enumerate_ideals(s)) out.push_back(i.members());
    return out;
  });
  m.def("maximal_ideals", [](const CommSemigroup& s) {
    std::vector<std::vector<Elem>> out;
    for (const auto& i : maximal_ideals(s)) out.push_back(i.members());
    return out;
  });
  m.def("annihilator", [](const CommSemigroup& s, Elem x) { return annihilator(s, x).members(); });
  m.def("principal_congruence", [](const CommSemigroup& s, const std::vector<Elem>& h) {
    return principal_congruence(s, to_set(s, h)).classes();
  }, "Classes of P_H, each sorted, ordered by least member.");
  m.def("quotient", [](const CommSemigroup& s, const std::vector<Elem>& h) {
    auto q = quotient(s, principal_congruence(s, to_set(s, h)));
    return py::make_tuple(q.semigroup, q.class_map);
  }, "Quotient by P_H and the map from elements to classes.");
  m.def("is_isomorphic", [](const CommSemigroup& a, const CommSemigroup& b) {
    return iso_check(a, b).has_value();
  });
  m.def("condition_star", [](const CommSemigroup& s) { return verdict_dict(condition_star_check(s)); });
  m.def("law_suite", [](const CommSemigroup& s) {
    py::list out;
    for (const auto& r : run_law_suite(s).results) {
      auto d = verdict_dict(r.verdict);
      d["law"] = r.law;
      d["instance"] = r.instance;
      out.append(d);
    }
    return out;
  });
  m.def("count_semigroups", &count_comm_semigroups, py::arg("order"));
  m.def("random_semigroups", [](std::size_t n, std::uint64_t seed, std::size_t count) {
    RandomCommSemigroups gen(n, seed);
    std::vector<CommSemigroup> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
    return out;
  }, py::arg("order"), py::arg("seed"), py::arg("count"));

  py::class_<Element>(m, "Element")
      .def(py::init([](const std::string& text, std::optional<std::string> domain) {
             if (domain) return Element::parse(text, DomainId::parse(*domain));
             return Element::parse(text);
           }),
           py::arg("text"), py::arg("domain") = std::nullopt)
      .def_property_readonly("domain", [](const Element& x) { return x.domain().to_string(); })
      .def("is_unit", [](const Element& x) { return is_unit(x); })
      .def("canonical", [](const Element& x) { return canonical_associate(x); })
      .def("norm", [](const Element& x) { return py::int_(py::str(bigint_str(norm(x)))); })
      .def("__str__", [](const Element& x) { return x.to_string(); })
      .def("__repr__", [](const Element& x) { return "Element('" + x.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& x) { return std::hash<std::string>{}(x.to_string()); });

  m.def("gcd", [](const Element& a, const Element& b) { return gcd(a, b); });
  m.def("divides", [](const Element& a, const Element& b) { return divides(a, b); });
  m.def("associated", [](const Element& a, const Element& b) { return associated(a, b); });
  m.def("divisor_count", [](const Element& a) { return divisor_count(a); });
  m.def("divisor_count_oracle", [](const Element& a) { return factor_divisor_count_oracle(a); });
  m.def("tau_classes", [](const Element& mod) {
    const auto t = tau_classes(mod);
    py::dict d;
    d["modulus"] = mod.to_string();
    std::vector<std::string> divisors;
    for (const auto& x : t.divisors) divisors.push_back(x.to_string());
    d["divisors"] = divisors;
    d["classes"] = t.partition.classes();
    return d;
  });
  m.def("residues", [](const Element& mod) {
    std::vector<std::string> out;
    for (const auto& r : enumerate_residues(mod)) out.push_back(r.to_string(false));
    return out;
  });
  m.def("theorem3_check", [](const Element& x) { return verdict_dict(theorem3_check(x)); });
  m.def("separator_class_check", [](const Element& x) { return verdict_dict(separator_class_check(x)); });
  m.def("dprime_coherence_check", [](const Element& x) { return verdict_dict(dprime_coherence_check(x)); });
  m.def("sharpness_check", [](const std::string& domain) {
    const auto r = tau0_sharpness_check(DomainId::parse(domain));
    auto d = verdict_dict(r.verdict);
    d["a"] = r.a.to_string();
    d["b"] = r.b.to_string();
    return d;
  });

  m.def("quad_ideal", [](int d, const std::vector<Element>& gens) {
    const auto a = QuadIdeal::from_generators(d, gens);
    auto out = ideal_dict(a);
    out["generator"] = principal_generator(a).to_string();
    const auto aa = ideal_mul(a, conjugate(a));
    out["conjugate_product_generator"] = principal_generator(aa).to_string();
    return out;
  }, py::arg("d"), py::arg("gens"));
  m.def("ideal_chain_check", [](int d, const std::vector<Element>& gens) {
    return verdict_dict(ideal_chain_check(d, gens).verdict);
  }, py::arg("d"), py::arg("gens"));
}
