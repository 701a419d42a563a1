#include "sepcong/quad_ideal.hpp"

#include <cctype>

namespace sepcong {

namespace {

struct Vec {
  Bigint x;  // coefficient of 1
  Bigint y;  // coefficient of omega
};

Vec operator-(const Vec& u, const Vec& v) { return {u.x - v.x, u.y - v.y}; }
Vec operator*(const Bigint& k, const Vec& v) { return {k * v.x, k * v.y}; }

// Column HNF of the lattice spanned by `vs`: Euclid on the omega-coordinates
// leaves one pivot row and a set of vectors on the rational axis.
std::array<Bigint, 3> column_hnf(std::vector<Vec> vs) {
  Vec pivot{0, 0};
  Bigint axis = 0;  // gcd of the rational-axis vectors
  for (auto& w : vs) {
    Vec v = pivot;
    while (w.y != 0) {
      Bigint q;
      mpz_fdiv_q(q.get_mpz_t(), v.y.get_mpz_t(), w.y.get_mpz_t());
      v = v - q * w;
      std::swap(v, w);
    }
    pivot = v;
    mpz_gcd(axis.get_mpz_t(), axis.get_mpz_t(), w.x.get_mpz_t());
  }
  if (pivot.y < 0) pivot = Bigint(-1) * pivot;
  if (axis == 0 || pivot.y == 0) {
    throw Error(Errc::NotAnIdealLattice, "generators span a degenerate lattice");
  }
  Bigint h12;
  mpz_fdiv_r(h12.get_mpz_t(), pivot.x.get_mpz_t(), axis.get_mpz_t());
  return {axis, h12, pivot.y};
}

bool lattice_contains(const Bigint& h11, const Bigint& h12, const Bigint& h22, const Bigint& x,
                      const Bigint& y) {
  if (!mpz_divisible_p(y.get_mpz_t(), h22.get_mpz_t())) return false;
  const Bigint rest = x - (y / h22) * h12;
  return mpz_divisible_p(rest.get_mpz_t(), h11.get_mpz_t()) != 0;
}

// Twice the bilinear form attached to the norm form: 2B(u, v), with B(v, v) = N(v).
Bigint twice_bilinear(const DomainId& dom, const QuadCoords& u, const QuadCoords& v) {
  return 2 * u.a * v.a + dom.omega_trace() * (u.a * v.b + u.b * v.a) +
         2 * dom.omega_norm() * u.b * v.b;
}

Bigint form(const DomainId& dom, const QuadCoords& u) {
  return u.a * u.a + dom.omega_trace() * u.a * u.b + dom.omega_norm() * u.b * u.b;
}

}  // namespace

QuadIdeal QuadIdeal::from_generators(int d, std::span<const Element> gens) {
  const auto dom = DomainId::quadratic(d);
  std::vector<QuadCoords> spanning;
  const auto omega = Element::quad(d, 0, 1);
  for (const auto& g : gens) {
    if (g.domain() != dom) {
      throw Error(Errc::DomainMismatch, "generator " + g.to_string() + " not in " + dom.to_string());
    }
    if (g.is_zero()) continue;
    spanning.push_back(g.as_quad());
    spanning.push_back((g * omega).as_quad());
  }
  if (spanning.empty()) throw Error(Errc::AllZero, "all generators are zero");
  return from_lattice(d, spanning);
}

QuadIdeal QuadIdeal::from_lattice(int d, std::span<const QuadCoords> spanning) {
  const auto dom = DomainId::quadratic(d);
  std::vector<Vec> vs;
  for (const auto& q : spanning) vs.push_back({q.a, q.b});
  auto [h11, h12, h22] = column_hnf(std::move(vs));

  // omega * (h11, 0) = (0, h11); omega * (h12, h22) = (-n*h22, h12 + t*h22)
  const Bigint t = dom.omega_trace();
  const Bigint n = dom.omega_norm();
  if (!lattice_contains(h11, h12, h22, 0, h11) ||
      !lattice_contains(h11, h12, h22, -n * h22, h12 + t * h22)) {
    throw Error(Errc::NotAnIdealLattice, "lattice is not closed under multiplication by w");
  }
  return QuadIdeal(d, h11, h12, h22);
}

std::array<std::array<Bigint, 2>, 2> QuadIdeal::hnf() const {
  return {{{h11_, h12_}, {Bigint(0), h22_}}};
}

std::array<Element, 2> QuadIdeal::basis() const {
  return {Element::quad(d_, h11_, 0), Element::quad(d_, h12_, h22_)};
}

bool QuadIdeal::contains(const Element& x) const {
  if (x.domain() != DomainId::quadratic(d_)) return false;
  return lattice_contains(h11_, h12_, h22_, x.as_quad().a, x.as_quad().b);
}

ResidueRing QuadIdeal::residues() const {
  return ResidueRing::of_quad_lattice(d_, h11_, h12_, h22_);
}

std::string QuadIdeal::to_string() const {
  const auto b = basis();
  return "ideal(" + std::to_string(d_) + "; " + b[0].to_string(false) + ", " +
         b[1].to_string(false) + ")";
}

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y) {
  if (x.d() != y.d()) throw Error(Errc::DomainMismatch, "ideals from different rings");
  std::vector<Element> products;
  for (const auto& u : x.basis()) {
    for (const auto& v : y.basis()) products.push_back(u * v);
  }
  return QuadIdeal::from_generators(x.d(), products);
}

QuadIdeal conjugate(const QuadIdeal& x) {
  std::vector<QuadCoords> conj;
  for (const auto& b : x.basis()) conj.push_back(conjugate(b).as_quad());
  return QuadIdeal::from_lattice(x.d(), conj);
}

std::array<QuadCoords, 2> gauss_reduce(int d, const QuadCoords& u0, const QuadCoords& v0) {
  const auto dom = DomainId::quadratic(d);
  QuadCoords u = u0;
  QuadCoords v = v0;
  if (form(dom, v) < form(dom, u)) std::swap(u, v);
  for (;;) {
    // mu = round(B(u, v) / N(u)) = floor((2B + N(u)) / (2 N(u)))
    const Bigint nu = form(dom, u);
    Bigint mu = twice_bilinear(dom, u, v) + nu;
    const Bigint den = 2 * nu;
    mpz_fdiv_q(mu.get_mpz_t(), mu.get_mpz_t(), den.get_mpz_t());
    v.a -= mu * u.a;
    v.b -= mu * u.b;
    if (form(dom, v) >= nu) break;
    std::swap(u, v);
  }
  return {u, v};
}

Element principal_generator(const QuadIdeal& ideal) {
  const auto reduced = gauss_reduce(ideal.d(), QuadCoords{ideal.h11(), 0},
                                    QuadCoords{ideal.h12(), ideal.h22()});
  const auto g = Element::quad(ideal.d(), reduced[0].a, reduced[0].b);
  const std::array<Element, 1> gens{g};
  if (!(QuadIdeal::from_generators(ideal.d(), gens) == ideal)) {
    throw Error(Errc::NotPrincipalWitness,
                "shortest vector " + g.to_string() + " does not generate " + ideal.to_string());
  }
  return canonical_associate(g);
}

IdealInput parse_ideal_input(std::string_view text) {
  std::string s(text);
  auto fail = [&] { throw Error(Errc::ParseError, "expected ideal(d; g1, g2, ...), got '" + s + "'"); };
  const auto open = s.find('(');
  const auto semi = s.find(';');
  const auto close = s.rfind(')');
  if (open == std::string::npos || semi == std::string::npos || close == std::string::npos ||
      !(open < semi && semi < close)) {
    fail();
  }
  std::string head = s.substr(0, open);
  head.erase(0, head.find_first_not_of(" \t"));
  head.erase(head.find_last_not_of(" \t") + 1);
  if (head != "ideal") fail();
  int d = 0;
  try {
    d = std::stoi(s.substr(open + 1, semi - open - 1));
  } catch (const std::exception&) {
    fail();
  }
  const auto dom = DomainId::quadratic(d);
  IdealInput input{d, {}};
  std::string rest = s.substr(semi + 1, close - semi - 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto piece = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    input.gens.push_back(Element::parse(piece, dom));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return input;
}

}  // namespace sepcong
