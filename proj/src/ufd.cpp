#include "sepcong/ufd.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sepcong/quad_ideal.hpp"

namespace sepcong {

namespace {

bool is_small_prime(int p) {
  if (p < 2 || p > kMaxFieldPrime) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

void require_same_domain(const Element& x, const Element& y) {
  if (x.domain() != y.domain()) {
    throw Error(Errc::DomainMismatch,
                x.domain().to_string() + " vs " + y.domain().to_string());
  }
}

// --- F_p[x] helpers ---------------------------------------------------------

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void poly_trim(PolyCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyCoeffs poly_add(const PolyCoeffs& x, const PolyCoeffs& y, std::uint32_t p) {
  PolyCoeffs out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t a = i < x.size() ? x[i] : 0;
    const std::uint32_t b = i < y.size() ? y[i] : 0;
    out[i] = (a + b) % p;
  }
  poly_trim(out);
  return out;
}

PolyCoeffs poly_neg(const PolyCoeffs& x, std::uint32_t p) {
  PolyCoeffs out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (p - x[i]) % p;
  return out;
}

PolyCoeffs poly_mul(const PolyCoeffs& x, const PolyCoeffs& y, std::uint32_t p) {
  if (x.empty() || y.empty()) return {};
  PolyCoeffs out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    }
  }
  poly_trim(out);
  return out;
}

PolyCoeffs poly_scale(const PolyCoeffs& x, std::uint32_t c, std::uint32_t p) {
  PolyCoeffs out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::uint64_t{x[i]} * c % p);
  }
  poly_trim(out);
  return out;
}

std::pair<PolyCoeffs, PolyCoeffs> poly_divmod_raw(PolyCoeffs num, const PolyCoeffs& den,
                                                  std::uint32_t p) {
  const std::uint32_t lead_inv = inv_mod(den.back(), p);
  if (num.size() < den.size()) return {{}, num};
  PolyCoeffs quot(num.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint32_t c =
        static_cast<std::uint32_t>(std::uint64_t{num[k + den.size() - 1]} * lead_inv % p);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) {
      const std::uint64_t sub = std::uint64_t{c} * den[j] % p;
      num[k + j] = static_cast<std::uint32_t>((num[k + j] + p - sub) % p);
    }
  }
  poly_trim(quot);
  poly_trim(num);
  return {quot, num};
}

PolyCoeffs poly_monic(const PolyCoeffs& x, std::uint32_t p) {
  if (x.empty()) return x;
  return poly_scale(x, inv_mod(x.back(), p), p);
}

// --- parsing ------------------------------------------------------------------

struct Term {
  Bigint coeff;
  int exponent;
};

// Sums of terms like "3", "-x^2", "2*x", "4w", "+1*w".
std::vector<Term> parse_terms(const std::string& text, char var) {
  std::vector<Term> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, "cannot parse '" + text + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    bool had_sign = false;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      had_sign = true;
      ++i;
      skip_ws();
    }
    if (!first && !had_sign) fail("expected '+' or '-'");
    first = false;

    Term t{1, 0};
    bool have_digits = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
    }
    if (!digits.empty()) {
      have_digits = true;
      t.coeff = Bigint(digits);
    }
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      if (!have_digits) fail("dangling '*'");
      ++i;
      skip_ws();
      if (i >= text.size() || text[i] != var) fail(std::string("expected '") + var + "'");
    }
    if (i < text.size() && text[i] == var) {
      ++i;
      t.exponent = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string e;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          e += text[i++];
        }
        if (e.empty() || e.size() > 4) fail("bad exponent");
        t.exponent = std::stoi(e);
      }
    } else if (!have_digits) {
      fail("expected a number or '" + std::string(1, var) + "'");
    }
    t.coeff *= sign;
    out.push_back(t);
    skip_ws();
  }
  return out;
}

std::string poly_to_string(const PolyCoeffs& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0 || c[k] != 1) out += std::to_string(c[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

// --- DomainId ---------------------------------------------------------------------

DomainId DomainId::poly(int p) {
  if (!is_small_prime(p)) {
    throw Error(Errc::InvalidDomain, "F_p needs a prime p <= 97, got " + std::to_string(p));
  }
  return DomainId(Kind::PolyOverPrimeField, p);
}

DomainId DomainId::quadratic(int d) {
  if (std::find(kHeegnerValues.begin(), kHeegnerValues.end(), d) == kHeegnerValues.end()) {
    throw Error(Errc::InvalidDomain, "d must be a class-number-one value, got " + std::to_string(d));
  }
  return DomainId(Kind::ImagQuadratic, d);
}

DomainId DomainId::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s == "int" || s == "Z" || s == "integers") return integers();
  auto parse_int = [&](const std::string& body) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(body, &used);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidDomain, "unknown domain '" + s + "'");
    }
    if (used != body.size()) throw Error(Errc::InvalidDomain, "unknown domain '" + s + "'");
    return v;
  };
  if (s.size() >= 2 && s.front() == 'F') {
    std::string body = s.substr(1);
    if (body.size() > 3 && body.substr(body.size() - 3) == "[x]") {
      body.resize(body.size() - 3);
    }
    return poly(parse_int(body));
  }
  if (s.size() >= 4 && s.rfind("Q(", 0) == 0 && s.back() == ')') {
    return quadratic(parse_int(s.substr(2, s.size() - 3)));
  }
  throw Error(Errc::InvalidDomain, "unknown domain '" + s + "'");
}

int DomainId::omega_trace() const noexcept { return (d() == -1 || d() == -2) ? 0 : 1; }

long DomainId::omega_norm() const noexcept {
  return (d() == -1 || d() == -2) ? -static_cast<long>(d()) : (1 - static_cast<long>(d())) / 4;
}

std::string DomainId::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "int";
    case Kind::PolyOverPrimeField: return "F" + std::to_string(param_);
    case Kind::ImagQuadratic: return "Q(" + std::to_string(param_) + ")";
  }
  return "?";
}

// --- Element ------------------------------------------------------------------------

Element Element::integer(Bigint value) { return Element(DomainId::integers(), std::move(value)); }

Element Element::poly(int p, PolyCoeffs coeffs) {
  const auto dom = DomainId::poly(p);
  for (auto& c : coeffs) c %= static_cast<std::uint32_t>(p);
  poly_trim(coeffs);
  return Element(dom, std::move(coeffs));
}

Element Element::quad(int d, Bigint a, Bigint b) {
  return Element(DomainId::quadratic(d), QuadCoords{std::move(a), std::move(b)});
}

Element Element::zero(const DomainId& dom) {
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return integer(0);
    case DomainId::Kind::PolyOverPrimeField: return poly(dom.prime(), {});
    case DomainId::Kind::ImagQuadratic: return quad(dom.d(), 0, 0);
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

Element Element::one(const DomainId& dom) {
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return integer(1);
    case DomainId::Kind::PolyOverPrimeField: return poly(dom.prime(), {1});
    case DomainId::Kind::ImagQuadratic: return quad(dom.d(), 1, 0);
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

Element Element::parse(std::string_view text, std::optional<DomainId> dom) {
  std::string body(text);
  if (const auto at = body.find('@'); at != std::string::npos) {
    const auto suffix = DomainId::parse(std::string_view(body).substr(at + 1));
    if (dom && *dom != suffix) {
      throw Error(Errc::DomainMismatch, "element suffix " + suffix.to_string() +
                                            " differs from " + dom->to_string());
    }
    dom = suffix;
    body.resize(at);
  }
  const DomainId d = dom.value_or(DomainId::integers());
  switch (d.kind()) {
    case DomainId::Kind::Integers: {
      Bigint sum = 0;
      for (const auto& t : parse_terms(body, '\0')) sum += t.coeff;
      return integer(sum);
    }
    case DomainId::Kind::PolyOverPrimeField: {
      const int p = d.prime();
      PolyCoeffs c;
      for (const auto& t : parse_terms(body, 'x')) {
        if (c.size() <= static_cast<std::size_t>(t.exponent)) c.resize(t.exponent + 1, 0);
        Bigint r = t.coeff % p;
        if (r < 0) r += p;
        c[t.exponent] = static_cast<std::uint32_t>((c[t.exponent] + r.get_ui()) % p);
      }
      return poly(p, std::move(c));
    }
    case DomainId::Kind::ImagQuadratic: {
      Bigint a = 0;
      Bigint b = 0;
      for (const auto& t : parse_terms(body, 'w')) {
        if (t.exponent > 1) throw Error(Errc::ParseError, "powers of w are not accepted");
        (t.exponent == 0 ? a : b) += t.coeff;
      }
      return quad(d.d(), a, b);
    }
  }
  throw Error(Errc::ParseError, "unknown domain kind");
}

bool Element::is_zero() const {
  switch (dom_.kind()) {
    case DomainId::Kind::Integers: return as_integer() == 0;
    case DomainId::Kind::PolyOverPrimeField: return as_poly().empty();
    case DomainId::Kind::ImagQuadratic: return as_quad().a == 0 && as_quad().b == 0;
  }
  return false;
}

int Element::degree() const { return static_cast<int>(as_poly().size()) - 1; }

std::string Element::to_string(bool with_domain) const {
  switch (dom_.kind()) {
    case DomainId::Kind::Integers: return as_integer().get_str();
    case DomainId::Kind::PolyOverPrimeField: {
      auto s = poly_to_string(as_poly());
      return with_domain ? s + " @ " + dom_.to_string() : s;
    }
    case DomainId::Kind::ImagQuadratic: {
      const auto& q = as_quad();
      std::string s = q.a.get_str();
      s += q.b < 0 ? "-" : "+";
      s += Bigint(abs(q.b)).get_str() + "*w";
      return with_domain ? s + " @ " + dom_.to_string() : s;
    }
  }
  return "?";
}

bool operator==(const Element& x, const Element& y) {
  if (x.dom_ != y.dom_) return false;
  switch (x.dom_.kind()) {
    case DomainId::Kind::Integers: return x.as_integer() == y.as_integer();
    case DomainId::Kind::PolyOverPrimeField: return x.as_poly() == y.as_poly();
    case DomainId::Kind::ImagQuadratic:
      return x.as_quad().a == y.as_quad().a && x.as_quad().b == y.as_quad().b;
  }
  return false;
}

bool operator<(const Element& x, const Element& y) {
  if (x.dom_ != y.dom_) return x.dom_ < y.dom_;
  switch (x.dom_.kind()) {
    case DomainId::Kind::Integers: return x.as_integer() < y.as_integer();
    case DomainId::Kind::PolyOverPrimeField: {
      const auto& a = x.as_poly();
      const auto& b = y.as_poly();
      if (a.size() != b.size()) return a.size() < b.size();
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    }
    case DomainId::Kind::ImagQuadratic: {
      const auto& a = x.as_quad();
      const auto& b = y.as_quad();
      if (a.a != b.a) return a.a < b.a;
      return a.b < b.b;
    }
  }
  return false;
}

// --- arithmetic --------------------------------------------------------------------

Element operator+(const Element& x, const Element& y) {
  require_same_domain(x, y);
  const auto& dom = x.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return Element::integer(x.as_integer() + y.as_integer());
    case DomainId::Kind::PolyOverPrimeField:
      return Element::poly(dom.prime(), poly_add(x.as_poly(), y.as_poly(), dom.prime()));
    case DomainId::Kind::ImagQuadratic:
      return Element::quad(dom.d(), x.as_quad().a + y.as_quad().a, x.as_quad().b + y.as_quad().b);
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

Element operator-(const Element& x) {
  const auto& dom = x.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return Element::integer(-x.as_integer());
    case DomainId::Kind::PolyOverPrimeField:
      return Element::poly(dom.prime(), poly_neg(x.as_poly(), dom.prime()));
    case DomainId::Kind::ImagQuadratic:
      return Element::quad(dom.d(), -x.as_quad().a, -x.as_quad().b);
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element operator*(const Element& x, const Element& y) {
  require_same_domain(x, y);
  const auto& dom = x.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return Element::integer(x.as_integer() * y.as_integer());
    case DomainId::Kind::PolyOverPrimeField:
      return Element::poly(dom.prime(), poly_mul(x.as_poly(), y.as_poly(), dom.prime()));
    case DomainId::Kind::ImagQuadratic: {
      // omega^2 = t*omega - n
      const auto& [a1, b1] = x.as_quad();
      const auto& [a2, b2] = y.as_quad();
      const Bigint bb = b1 * b2;
      return Element::quad(dom.d(), a1 * a2 - bb * dom.omega_norm(),
                           a1 * b2 + a2 * b1 + bb * dom.omega_trace());
    }
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

Bigint norm(const Element& x) {
  const auto& dom = x.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return abs(x.as_integer());
    case DomainId::Kind::PolyOverPrimeField: {
      if (x.is_zero()) return 0;
      Bigint out;
      mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(dom.prime()),
                    static_cast<unsigned long>(x.degree()));
      return out;
    }
    case DomainId::Kind::ImagQuadratic: {
      const auto& [a, b] = x.as_quad();
      return a * a + a * b * dom.omega_trace() + b * b * dom.omega_norm();
    }
  }
  return 0;
}

Element conjugate(const Element& x) {
  if (x.domain().kind() != DomainId::Kind::ImagQuadratic) return x;
  // conj(omega) = t - omega
  const auto& [a, b] = x.as_quad();
  return Element::quad(x.domain().d(), a + b * x.domain().omega_trace(), -b);
}

bool is_unit(const Element& x) {
  switch (x.domain().kind()) {
    case DomainId::Kind::Integers: return abs(x.as_integer()) == 1;
    case DomainId::Kind::PolyOverPrimeField: return x.as_poly().size() == 1;
    case DomainId::Kind::ImagQuadratic: return norm(x) == 1;
  }
  return false;
}

std::vector<Element> units(const DomainId& dom) {
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return {Element::integer(1), Element::integer(-1)};
    case DomainId::Kind::PolyOverPrimeField: {
      std::vector<Element> out;
      for (int c = 1; c < dom.prime(); ++c) {
        out.push_back(Element::poly(dom.prime(), {static_cast<std::uint32_t>(c)}));
      }
      return out;
    }
    case DomainId::Kind::ImagQuadratic: {
      auto out = quad_elements_up_to_norm(dom.d(), 1);
      // put 1 first so unit lists read naturally
      std::stable_partition(out.begin(), out.end(),
                            [&](const Element& u) { return u == Element::one(dom); });
      return out;
    }
  }
  return {};
}

Element canonical_associate(const Element& x) {
  const auto& dom = x.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: return Element::integer(abs(x.as_integer()));
    case DomainId::Kind::PolyOverPrimeField:
      return Element::poly(dom.prime(), poly_monic(x.as_poly(), dom.prime()));
    case DomainId::Kind::ImagQuadratic: {
      if (x.is_zero()) return x;
      std::optional<Element> best;
      for (const auto& u : units(dom)) {
        auto cand = u * x;
        const auto& c = cand.as_quad();
        if (!best || c.a > best->as_quad().a ||
            (c.a == best->as_quad().a && c.b > best->as_quad().b)) {
          best = std::move(cand);
        }
      }
      return *best;
    }
  }
  return x;
}

bool associated(const Element& x, const Element& y) {
  require_same_domain(x, y);
  return canonical_associate(x) == canonical_associate(y);
}

Element gcd(const Element& a, const Element& b) {
  require_same_domain(a, b);
  if (b.is_zero()) return canonical_associate(a);
  if (a.is_zero()) return canonical_associate(b);
  const auto& dom = a.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: {
      Bigint g;
      mpz_gcd(g.get_mpz_t(), a.as_integer().get_mpz_t(), b.as_integer().get_mpz_t());
      return Element::integer(g);
    }
    case DomainId::Kind::PolyOverPrimeField: {
      const auto p = static_cast<std::uint32_t>(dom.prime());
      PolyCoeffs x = a.as_poly();
      PolyCoeffs y = b.as_poly();
      while (!y.empty()) {
        auto r = poly_divmod_raw(x, y, p).second;
        x = std::move(y);
        y = std::move(r);
      }
      return Element::poly(dom.prime(), poly_monic(x, p));
    }
    case DomainId::Kind::ImagQuadratic: {
      const std::array<Element, 2> gens{a, b};
      return principal_generator(QuadIdeal::from_generators(dom.d(), gens));
    }
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

std::pair<Element, Element> poly_divmod(const Element& num, const Element& den) {
  require_same_domain(num, den);
  if (num.domain().kind() != DomainId::Kind::PolyOverPrimeField) {
    throw Error(Errc::DomainMismatch, "poly_divmod needs polynomials");
  }
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  const int p = num.domain().prime();
  auto [q, r] = poly_divmod_raw(num.as_poly(), den.as_poly(), static_cast<std::uint32_t>(p));
  return {Element::poly(p, std::move(q)), Element::poly(p, std::move(r))};
}

namespace {

std::optional<Element> try_divide(const Element& b, const Element& a) {
  const auto& dom = a.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: {
      if (!mpz_divisible_p(b.as_integer().get_mpz_t(), a.as_integer().get_mpz_t())) {
        return std::nullopt;
      }
      Bigint q;
      mpz_divexact(q.get_mpz_t(), b.as_integer().get_mpz_t(), a.as_integer().get_mpz_t());
      return Element::integer(q);
    }
    case DomainId::Kind::PolyOverPrimeField: {
      auto [q, r] = poly_divmod(b, a);
      if (!r.is_zero()) return std::nullopt;
      return q;
    }
    case DomainId::Kind::ImagQuadratic: {
      const Bigint n = norm(a);
      const auto num = b * conjugate(a);
      const auto& [x, y] = num.as_quad();
      if (!mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()) ||
          !mpz_divisible_p(y.get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
      }
      return Element::quad(dom.d(), Bigint(x / n), Bigint(y / n));
    }
  }
  return std::nullopt;
}

}  // namespace

bool divides(const Element& a, const Element& b) {
  require_same_domain(a, b);
  if (a.is_zero()) return b.is_zero();
  return try_divide(b, a).has_value();
}

Element div_exact(const Element& b, const Element& a) {
  require_same_domain(a, b);
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "divisor is zero");
  auto q = try_divide(b, a);
  if (!q) throw Error(Errc::NotDivisible, a.to_string() + " does not divide " + b.to_string());
  return *q;
}

// --- residue rings --------------------------------------------------------------

ResidueRing ResidueRing::of(const Element& m) {
  if (m.is_zero()) throw Error(Errc::ZeroModulus, "residue ring of the zero ideal");
  const auto& dom = m.domain();
  ResidueRing r(dom);
  switch (dom.kind()) {
    case DomainId::Kind::Integers: {
      r.int_modulus_ = abs(m.as_integer());
      if (r.int_modulus_ > kMaxResidues) {
        throw Error(Errc::SizeLimitExceeded, "too many residues");
      }
      r.size_ = r.int_modulus_.get_ui();
      return r;
    }
    case DomainId::Kind::PolyOverPrimeField: {
      r.monic_modulus_ = poly_monic(m.as_poly(), static_cast<std::uint32_t>(dom.prime()));
      const Bigint count = norm(m);
      if (count > kMaxResidues) throw Error(Errc::SizeLimitExceeded, "too many residues");
      r.size_ = count.get_ui();
      return r;
    }
    case DomainId::Kind::ImagQuadratic: {
      const std::array<Element, 1> gens{m};
      return QuadIdeal::from_generators(dom.d(), gens).residues();
    }
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

ResidueRing ResidueRing::of_quad_lattice(int d, const Bigint& h11, const Bigint& h12,
                                         const Bigint& h22) {
  ResidueRing r(DomainId::quadratic(d));
  const Bigint count = h11 * h22;
  if (count <= 0) throw Error(Errc::ZeroModulus, "degenerate lattice");
  if (count > kMaxResidues) throw Error(Errc::SizeLimitExceeded, "too many residues");
  r.h11_ = h11;
  r.h12_ = h12;
  r.h22_ = h22;
  r.size_ = count.get_ui();
  return r;
}

Element ResidueRing::element(std::size_t index) const {
  if (index >= size_) throw Error(Errc::IndexOutOfRange, "residue index", {index});
  switch (dom_.kind()) {
    case DomainId::Kind::Integers: return Element::integer(Bigint(static_cast<unsigned long>(index)));
    case DomainId::Kind::PolyOverPrimeField: {
      const auto p = static_cast<std::size_t>(dom_.prime());
      PolyCoeffs c;
      for (std::size_t i = index; i > 0; i /= p) c.push_back(static_cast<std::uint32_t>(i % p));
      return Element::poly(dom_.prime(), std::move(c));
    }
    case DomainId::Kind::ImagQuadratic: {
      const std::size_t w = h11_.get_ui();
      return Element::quad(dom_.d(), Bigint(static_cast<unsigned long>(index % w)),
                           Bigint(static_cast<unsigned long>(index / w)));
    }
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

std::vector<Element> ResidueRing::transversal() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

std::size_t ResidueRing::reduce(const Element& x) const {
  if (x.domain() != dom_) throw Error(Errc::DomainMismatch, "reduce across domains");
  switch (dom_.kind()) {
    case DomainId::Kind::Integers: {
      Bigint r;
      mpz_fdiv_r(r.get_mpz_t(), x.as_integer().get_mpz_t(), int_modulus_.get_mpz_t());
      return r.get_ui();
    }
    case DomainId::Kind::PolyOverPrimeField: {
      const auto p = static_cast<std::uint32_t>(dom_.prime());
      const auto rem = poly_divmod_raw(x.as_poly(), monic_modulus_, p).second;
      std::size_t index = 0;
      for (std::size_t k = rem.size(); k-- > 0;) index = index * p + rem[k];
      return index;
    }
    case DomainId::Kind::ImagQuadratic: {
      const auto& [a0, b0] = x.as_quad();
      Bigint q;
      mpz_fdiv_q(q.get_mpz_t(), b0.get_mpz_t(), h22_.get_mpz_t());
      Bigint a = a0 - q * h12_;
      Bigint b = b0 - q * h22_;
      mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), h11_.get_mpz_t());
      return Bigint(b * h11_ + a).get_ui();
    }
  }
  throw Error(Errc::InvalidDomain, "unknown domain kind");
}

CommSemigroup ResidueRing::multiplicative_semigroup() const {
  const std::size_t n = size_;
  if (n > kMaxResidueTable) {
    throw Error(Errc::SizeLimitExceeded, "residue table larger than " +
                                             std::to_string(kMaxResidueTable) + " elements");
  }
  std::vector<Elem> table(n * n);
  switch (dom_.kind()) {
    case DomainId::Kind::Integers: {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>(i * j % n);
      }
      break;
    }
    case DomainId::Kind::PolyOverPrimeField: {
      const auto p = static_cast<std::uint64_t>(dom_.prime());
      const std::size_t k = monic_modulus_.size() - 1;
      std::vector<std::vector<std::uint64_t>> digits(n, std::vector<std::uint64_t>(k, 0));
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = i;
        for (std::size_t t = 0; t < k; ++t, v /= p) digits[i][t] = v % p;
      }
      std::vector<std::uint64_t> prod(2 * k + 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          std::fill(prod.begin(), prod.end(), 0);
          for (std::size_t s = 0; s < k; ++s) {
            if (digits[i][s] == 0) continue;
            for (std::size_t t = 0; t < k; ++t) prod[s + t] += digits[i][s] * digits[j][t];
          }
          // x^k = -(f_0 + ... + f_{k-1} x^{k-1}) for the monic modulus f
          for (std::size_t deg = 2 * k; deg-- > k;) {
            const std::uint64_t c = prod[deg] % p;
            prod[deg] = 0;
            if (c == 0) continue;
            for (std::size_t t = 0; t < k; ++t) {
              prod[deg - k + t] += c * (p - monic_modulus_[t]) % p;
            }
          }
          std::size_t index = 0;
          for (std::size_t t = k; t-- > 0;) index = index * p + prod[t] % p;
          table[i * n + j] = table[j * n + i] = static_cast<Elem>(index);
        }
      }
      break;
    }
    case DomainId::Kind::ImagQuadratic: {
      const long h11 = h11_.get_si();
      const long h12 = h12_.get_si();
      const long h22 = h22_.get_si();
      const long tr = dom_.omega_trace();
      const long nm = dom_.omega_norm();
      auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
      for (std::size_t i = 0; i < n; ++i) {
        const long a1 = static_cast<long>(i) % h11;
        const long b1 = static_cast<long>(i) / h11;
        for (std::size_t j = i; j < n; ++j) {
          const long a2 = static_cast<long>(j) % h11;
          const long b2 = static_cast<long>(j) / h11;
          long a = a1 * a2 - nm * b1 * b2;
          long b = a1 * b2 + a2 * b1 + tr * b1 * b2;
          const long q = floor_div(b, h22);
          a -= q * h12;
          b -= q * h22;
          a -= floor_div(a, h11) * h11;
          table[i * n + j] = table[j * n + i] = static_cast<Elem>(b * h11 + a);
        }
      }
      break;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(element(i).to_string(false));
  return CommSemigroup::from_structure(n, std::move(table), std::move(labels));
}

std::vector<Element> enumerate_residues(const Element& m) {
  return ResidueRing::of(m).transversal();
}

ResidueSemigroup residue_semigroup(const Element& m) {
  auto ring = ResidueRing::of(m);
  auto transversal = ring.transversal();
  auto table = ring.multiplicative_semigroup();
  return ResidueSemigroup{m, std::move(ring), std::move(transversal), std::move(table)};
}

// --- divisor-count oracle ----------------------------------------------------------

std::vector<Element> quad_elements_up_to_norm(int d, const Bigint& bound) {
  const auto dom = DomainId::quadratic(d);
  const long tr = dom.omega_trace();
  // 4 N(a + b w) = (2a + t b)^2 + disc * b^2
  const long disc = tr == 0 ? -4L * d : -static_cast<long>(d);
  std::vector<Element> out;
  const Bigint four_bound = 4 * bound;
  Bigint bmax = sqrt(Bigint(four_bound / disc));
  for (Bigint b = -bmax; b <= bmax; ++b) {
    const Bigint rest = four_bound - disc * b * b;
    if (rest < 0) continue;
    const Bigint r = sqrt(rest);
    // -r <= 2a + t b <= r
    Bigint lo = -r - tr * b;
    Bigint hi = r - tr * b;
    mpz_cdiv_q_ui(lo.get_mpz_t(), lo.get_mpz_t(), 2);
    mpz_fdiv_q_ui(hi.get_mpz_t(), hi.get_mpz_t(), 2);
    for (Bigint a = lo; a <= hi; ++a) {
      auto x = Element::quad(d, a, b);
      if (!x.is_zero() && norm(x) <= bound) out.push_back(std::move(x));
    }
  }
  return out;
}

std::size_t factor_divisor_count_oracle(const Element& a, const OracleCaps& caps) {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "d(0) is not defined");
  const auto& dom = a.domain();
  switch (dom.kind()) {
    case DomainId::Kind::Integers: {
      const Bigint v = abs(a.as_integer());
      if (v > caps.max_abs) throw Error(Errc::SizeLimitExceeded, "|a| above oracle cap");
      const unsigned long n = v.get_ui();
      std::size_t count = 0;
      for (unsigned long i = 1; i <= n; ++i) count += n % i == 0 ? 1 : 0;
      return count;
    }
    case DomainId::Kind::PolyOverPrimeField: {
      const int deg = a.degree();
      if (deg > caps.max_deg) throw Error(Errc::SizeLimitExceeded, "degree above oracle cap");
      const auto p = static_cast<std::size_t>(dom.prime());
      std::size_t count = 0;
      std::size_t combos = 1;
      for (int k = 0; k <= deg; ++k, combos *= p) {
        for (std::size_t idx = 0; idx < combos; ++idx) {
          PolyCoeffs c(static_cast<std::size_t>(k) + 1, 0);
          std::size_t v = idx;
          for (int t = 0; t < k; ++t, v /= p) c[t] = static_cast<std::uint32_t>(v % p);
          c[k] = 1;
          if (divides(Element::poly(dom.prime(), std::move(c)), a)) ++count;
        }
      }
      return count;
    }
    case DomainId::Kind::ImagQuadratic: {
      const Bigint n = norm(a);
      if (n > caps.max_norm) throw Error(Errc::SizeLimitExceeded, "norm above oracle cap");
      std::size_t count = 0;
      for (const auto& x : quad_elements_up_to_norm(dom.d(), n)) {
        if (!mpz_divisible_p(n.get_mpz_t(), norm(x).get_mpz_t())) continue;
        if (!(canonical_associate(x) == x)) continue;
        if (divides(x, a)) ++count;
      }
      return count;
    }
  }
  return 0;
}

}  // namespace sepcong
