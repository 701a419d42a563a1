#include "sepcong/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sepcong {

// --- ElementSet ---------------------------------------------------------------

ElementSet::ElementSet(std::size_t n, std::initializer_list<Elem> members)
    : ElementSet(n, std::span<const Elem>(members.begin(), members.size())) {}

ElementSet::ElementSet(std::size_t n, std::span<const Elem> members) : bits_(n, false) {
  for (Elem x : members) {
    if (x >= n) throw Error(Errc::IndexOutOfRange, "set member outside carrier", {x});
    bits_[x] = true;
  }
}

ElementSet ElementSet::full(std::size_t n) {
  ElementSet s(n);
  s.bits_.assign(n, true);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

ElementSet ElementSet::complement() const {
  ElementSet out(carrier());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

ElementSet operator|(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.carrier());
  for (std::size_t i = 0; i < a.bits_.size(); ++i) out.bits_[i] = a.bits_[i] || b.bits_[i];
  return out;
}

ElementSet operator&(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.carrier());
  for (std::size_t i = 0; i < a.bits_.size(); ++i) out.bits_[i] = a.bits_[i] && b.bits_[i];
  return out;
}

std::size_t PairContext::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

// --- Partition ----------------------------------------------------------------

Partition Partition::from_classes(std::size_t n, const std::vector<std::vector<Elem>>& classes) {
  std::vector<std::size_t> keys(n, n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Elem x : classes[c]) {
      if (x >= n || keys[x] != n) {
        throw Error(Errc::IndexOutOfRange, "classes do not partition the carrier", {x});
      }
      keys[x] = c;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (keys[x] == n) throw Error(Errc::IndexOutOfRange, "element missing from classes", {x});
  }
  return from_keys(keys);
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> keys(n);
  std::iota(keys.begin(), keys.end(), std::size_t{0});
  return from_keys(keys);
}

Partition Partition::universal(std::size_t n) {
  return from_keys(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<Elem>> Partition::classes() const {
  std::vector<std::vector<Elem>> out(num_classes());
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    out[class_of_[x]].push_back(static_cast<Elem>(x));
  }
  return out;
}

ElementSet Partition::class_set(std::size_t c) const {
  ElementSet out(carrier());
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    if (class_of_[x] == c) out.insert(static_cast<Elem>(x));
  }
  return out;
}

// --- CommSemigroup -------------------------------------------------------------

CommSemigroup CommSemigroup::validate(std::size_t n, std::vector<Elem> table,
                                      std::vector<std::string> labels) {
  if (n == 0) throw Error(Errc::TooSmall, "semigroup order must be positive");
  if (table.size() != n * n) {
    throw Error(Errc::IndexOutOfRange, "table must have n*n entries");
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(Errc::IndexOutOfRange, "label count differs from order");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error(Errc::IndexOutOfRange, "table entry out of range", {i / n, i % n});
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (at(a, b) != at(b, a)) {
        throw Error(Errc::CommutativityViolation, "a*b != b*a", {a, b});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw Error(Errc::AssociativityViolation, "(a*b)*c != a*(b*c)", {a, b, c});
        }
      }
    }
  }

  return from_structure(n, std::move(table), std::move(labels));
}

CommSemigroup CommSemigroup::from_structure(std::size_t n, std::vector<Elem> table,
                                            std::vector<std::string> labels) {
  if (n == 0) throw Error(Errc::TooSmall, "semigroup order must be positive");
  if (table.size() != n * n) throw Error(Errc::IndexOutOfRange, "table must have n*n entries");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error(Errc::IndexOutOfRange, "table entry out of range", {i / n, i % n});
    }
  }
  CommSemigroup s;
  s.n_ = n;
  s.table_ = std::move(table);
  s.labels_ = std::move(labels);
  s.detect_identity_and_zero();
  return s;
}

void CommSemigroup::detect_identity_and_zero() {
  for (Elem e = 0; e < n_ && !identity_; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x;
    if (ok) identity_ = e;
  }
  for (Elem z = 0; z < n_ && !zero_; ++z) {
    bool ok = true;
    for (Elem x = 0; x < n_ && ok; ++x) ok = mul(z, x) == z;
    if (ok) zero_ = z;
  }
}

CommSemigroup CommSemigroup::validate(const std::vector<std::vector<Elem>>& rows,
                                      std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(Errc::IndexOutOfRange, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate(n, std::move(flat), std::move(labels));
}

std::string CommSemigroup::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::optional<Elem> CommSemigroup::find_label(const std::string& name) const {
  for (Elem x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == name) return x;
  }
  return std::nullopt;
}

// --- subsets and ideals ----------------------------------------------------------

namespace {

void require_carrier(const CommSemigroup& s, const ElementSet& a) {
  if (a.carrier() != s.order()) {
    throw Error(Errc::IndexOutOfRange, "subset carrier differs from semigroup order");
  }
}

}  // namespace

bool is_ideal(const CommSemigroup& s, const ElementSet& a) {
  require_carrier(s, a);
  if (a.empty()) throw Error(Errc::EmptySet, "ideals are nonempty");
  for (Elem x : a.members()) {
    for (Elem t = 0; t < s.order(); ++t) {
      if (!a.contains(s.mul(t, x))) return false;
    }
  }
  return true;
}

bool is_subsemigroup(const CommSemigroup& s, const ElementSet& a) {
  require_carrier(s, a);
  const auto m = a.members();
  for (Elem x : m) {
    for (Elem y : m) {
      if (!a.contains(s.mul(x, y))) return false;
    }
  }
  return true;
}

ElementSet idealizer(const CommSemigroup& s, const ElementSet& a) {
  require_carrier(s, a);
  const auto m = a.members();
  ElementSet out(s.order());
  for (Elem x = 0; x < s.order(); ++x) {
    bool ok = true;
    for (auto it = m.begin(); ok && it != m.end(); ++it) ok = a.contains(s.mul(x, *it));
    if (ok) out.insert(x);
  }
  return out;
}

ElementSet separator(const CommSemigroup& s, const ElementSet& a) {
  return idealizer(s, a) & idealizer(s, a.complement());
}

ElementSet principal_ideal(const CommSemigroup& s, Elem a) {
  ElementSet out(s.order());
  out.insert(a);
  for (Elem t = 0; t < s.order(); ++t) out.insert(s.mul(t, a));
  return out;
}

std::vector<ElementSet> enumerate_ideals(const CommSemigroup& s) {
  std::set<ElementSet> found;
  std::vector<ElementSet> frontier;
  std::vector<ElementSet> principals;
  for (Elem a = 0; a < s.order(); ++a) principals.push_back(principal_ideal(s, a));
  for (const auto& p : principals) {
    if (found.insert(p).second) frontier.push_back(p);
  }
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& f : frontier) {
      for (const auto& p : principals) {
        auto u = f | p;
        if (found.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& x, const ElementSet& y) {
    return x.count() < y.count();
  });
  return out;
}

std::vector<ElementSet> maximal_ideals(const CommSemigroup& s) {
  std::vector<ElementSet> proper;
  for (auto& i : enumerate_ideals(s)) {
    if (!i.is_full()) proper.push_back(std::move(i));
  }
  std::vector<ElementSet> out;
  for (const auto& i : proper) {
    bool maximal = true;
    for (const auto& j : proper) {
      if (i != j && i.subset_of(j)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

bool is_prime_ideal(const CommSemigroup& s, const ElementSet& ideal) {
  if (!is_ideal(s, ideal)) throw Error(Errc::NotAnIdeal, "prime test needs an ideal");
  if (ideal.is_full()) throw Error(Errc::NotProper, "prime ideals are proper");
  for (Elem a = 0; a < s.order(); ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < s.order(); ++b) {
      if (!ideal.contains(b) && ideal.contains(s.mul(a, b))) return false;
    }
  }
  return true;
}

// --- congruences -------------------------------------------------------------------

PairContext context(const CommSemigroup& s, const ElementSet& h, Elem a) {
  require_carrier(s, h);
  PairContext out(s.order());
  for (Elem x = 0; x < s.order(); ++x) {
    const Elem xa = s.mul(x, a);
    for (Elem y = 0; y < s.order(); ++y) {
      if (h.contains(s.mul(xa, y))) out.insert(x, y);
    }
  }
  return out;
}

Partition principal_congruence(const CommSemigroup& s, const ElementSet& h) {
  require_carrier(s, h);
  const std::size_t n = s.order();
  std::vector<bool> is_product(n, false);
  for (Elem v : s.raw_table()) is_product[v] = true;
  std::vector<Elem> products;
  for (Elem z = 0; z < n; ++z) {
    if (is_product[z]) products.push_back(z);
  }

  std::vector<std::vector<bool>> signature(n, std::vector<bool>(products.size()));
  for (Elem a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < products.size(); ++k) {
      signature[a][k] = h.contains(s.mul(a, products[k]));
    }
  }
  Partition p = Partition::from_keys(signature);
  if (!is_congruence(s, p)) {
    throw Error(Errc::InternalCongruenceCheckFailure, "P_H failed the compatibility check");
  }
  p.mark_congruence(true);
  return p;
}

bool is_congruence(const CommSemigroup& s, const Partition& p) {
  if (p.carrier() != s.order()) return false;
  const auto reps = p.representatives();
  for (Elem x = 0; x < s.order(); ++x) {
    const Elem r = reps[p.class_of(x)];
    if (r == x) continue;
    for (Elem t = 0; t < s.order(); ++t) {
      if (!p.same_class(s.mul(t, x), s.mul(t, r))) return false;
    }
  }
  return true;
}

Quotient quotient(const CommSemigroup& s, const Partition& p) {
  if (!is_congruence(s, p)) throw Error(Errc::NotACongruence, "quotient needs a congruence");
  const std::size_t k = p.num_classes();
  const auto reps = p.representatives();
  std::vector<Elem> table(k * k);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      table[c * k + d] = static_cast<Elem>(p.class_of(s.mul(reps[c], reps[d])));
    }
    labels.push_back("[" + s.label(reps[c]) + "]");
  }
  Quotient q{CommSemigroup::from_structure(k, std::move(table), std::move(labels)), {}};
  q.class_map.resize(s.order());
  for (Elem x = 0; x < s.order(); ++x) q.class_map[x] = static_cast<Elem>(p.class_of(x));
  return q;
}

// --- annihilators ----------------------------------------------------------------

ElementSet annihilator(const CommSemigroup& s, Elem x) {
  const auto z = s.zero();
  if (!z) throw Error(Errc::NoZeroElement, "annihilators need a zero");
  ElementSet out(s.order());
  for (Elem t = 0; t < s.order(); ++t) {
    if (s.mul(t, x) == *z) out.insert(t);
  }
  return out;
}

ElementSet torsion_set(const CommSemigroup& s) {
  const auto z = s.zero();
  if (!z) throw Error(Errc::NoZeroElement, "torsion needs a zero");
  if (s.order() < 2) throw Error(Errc::TooSmall, "torsion set needs |S| >= 2");
  ElementSet out(s.order());
  for (Elem x = 0; x < s.order(); ++x) {
    if (annihilator(s, x).count() > 1) out.insert(x);
  }
  return out;
}

// --- isomorphism -------------------------------------------------------------------

namespace {

struct IsoInvariant {
  bool idempotent;
  bool identity;
  bool zero;
  std::size_t image_size;  // |xS|
  std::size_t fixers;      // #{y : xy = x}
  std::size_t roots;       // #{y : yy = x}
  auto operator<=>(const IsoInvariant&) const = default;
};

std::vector<IsoInvariant> invariants(const CommSemigroup& s) {
  const std::size_t n = s.order();
  std::vector<IsoInvariant> out(n);
  for (Elem x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    IsoInvariant inv{s.mul(x, x) == x, s.identity() == x, s.zero() == x, 0, 0, 0};
    for (Elem y = 0; y < n; ++y) {
      seen[s.mul(x, y)] = true;
      if (s.mul(x, y) == x) ++inv.fixers;
      if (s.mul(y, y) == x) ++inv.roots;
    }
    inv.image_size = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
    out[x] = inv;
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const CommSemigroup& a, const CommSemigroup& b)
      : a_(a), b_(b), inv_a_(invariants(a)), inv_b_(invariants(b)),
        phi_(a.order(), kUnset), used_(b.order(), false) {}

  bool run(Elem x) {
    if (x == a_.order()) return true;
    for (Elem y = 0; y < b_.order(); ++y) {
      if (used_[y] || inv_a_[x] != inv_b_[y]) continue;
      phi_[x] = y;
      used_[y] = true;
      if (consistent(x) && run(x + 1)) return true;
      used_[y] = false;
      phi_[x] = kUnset;
    }
    return false;
  }

  std::vector<Elem> mapping() const { return phi_; }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  // Every product of assigned elements whose result is also assigned, where
  // the triple involves x.
  bool consistent(Elem x) const {
    for (Elem u = 0; u <= x; ++u) {
      for (Elem v = u; v <= x; ++v) {
        const Elem uv = a_.mul(u, v);
        if (u != x && v != x && uv != x) continue;
        if (uv <= x && phi_[uv] != b_.mul(phi_[u], phi_[v])) return false;
      }
    }
    return true;
  }

  const CommSemigroup& a_;
  const CommSemigroup& b_;
  std::vector<IsoInvariant> inv_a_;
  std::vector<IsoInvariant> inv_b_;
  std::vector<Elem> phi_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Elem>> iso_check(const CommSemigroup& s1, const CommSemigroup& s2) {
  if (s1.order() > kIsoMaxOrder || s2.order() > kIsoMaxOrder) {
    throw Error(Errc::SizeLimitExceeded, "iso_check supports orders up to 12");
  }
  if (s1.order() != s2.order()) return std::nullopt;
  auto ia = invariants(s1);
  auto ib = invariants(s2);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  IsoSearch search(s1, s2);
  if (!search.run(0)) return std::nullopt;
  return search.mapping();
}

// --- helpers -----------------------------------------------------------------------

CommSemigroup restrict_to(const CommSemigroup& s, const std::vector<Elem>& keep) {
  std::vector<Elem> index(s.order(), ~Elem{0});
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Elem>(i);
  const std::size_t k = keep.size();
  std::vector<Elem> table(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Elem v = index[s.mul(keep[i], keep[j])];
      if (v == ~Elem{0}) {
        throw Error(Errc::NonzeroNotClosed, "subset is not closed", {keep[i], keep[j]});
      }
      table[i * k + j] = v;
    }
    labels.push_back(s.label(keep[i]));
  }
  return CommSemigroup::validate(k, std::move(table), std::move(labels));
}

ElementSet parse_subset(const CommSemigroup& s, const std::string& text) {
  ElementSet out(s.order());
  std::string body = text;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  std::stringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    if (auto l = s.find_label(tok)) {
      out.insert(*l);
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "unknown subset member '" + tok + "'");
    }
    if (used != tok.size()) throw Error(Errc::ParseError, "unknown subset member '" + tok + "'");
    if (v >= s.order()) throw Error(Errc::IndexOutOfRange, "subset member out of range", {v});
    out.insert(static_cast<Elem>(v));
  }
  return out;
}

std::string format_subset(const CommSemigroup& s, const ElementSet& a) {
  std::string out = "{";
  bool first = true;
  for (Elem x : a.members()) {
    if (!first) out += ",";
    out += s.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace sepcong
