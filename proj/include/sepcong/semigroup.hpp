#pragma once

// Finite commutative semigroups given by Cayley tables, together with the
// subset machinery built on them: ideals, idealizers, separators, contexts
// and the principal congruences they define.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepcong/error.hpp"

namespace sepcong {

using Elem = std::uint32_t;

// A subset of the carrier {0, ..., n-1}.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : bits_(n, false) {}
  ElementSet(std::size_t n, std::initializer_list<Elem> members);
  ElementSet(std::size_t n, std::span<const Elem> members);

  static ElementSet full(std::size_t n);

  std::size_t carrier() const noexcept { return bits_.size(); }
  bool contains(Elem x) const { return bits_[x]; }
  void insert(Elem x) { bits_[x] = true; }
  void erase(Elem x) { bits_[x] = false; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == carrier(); }

  ElementSet complement() const;
  bool subset_of(const ElementSet& other) const;
  std::vector<Elem> members() const;

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b);
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b);
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<bool> bits_;
};

// The context H...a: pairs (x, y) with x*a*y in H, bit (x, y) at x*n + y.
class PairContext {
 public:
  explicit PairContext(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t carrier() const noexcept { return n_; }
  bool contains(Elem x, Elem y) const { return bits_[x * n_ + y]; }
  void insert(Elem x, Elem y) { bits_[x * n_ + y] = true; }
  std::size_t count() const noexcept;

  friend bool operator==(const PairContext&, const PairContext&) = default;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

// An equivalence on {0, ..., n-1} in canonical form: classes are numbered in
// order of their least member, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;

  // Canonicalizes an arbitrary labelling: x and y share a class iff
  // keys[x] == keys[y].
  template <typename Key>
  static Partition from_keys(const std::vector<Key>& keys);
  static Partition from_classes(std::size_t n, const std::vector<std::vector<Elem>>& classes);
  static Partition identity(std::size_t n);
  static Partition universal(std::size_t n);

  std::size_t carrier() const noexcept { return class_of_.size(); }
  std::size_t num_classes() const noexcept { return reps_.size(); }
  std::size_t class_of(Elem x) const { return class_of_[x]; }
  bool same_class(Elem x, Elem y) const { return class_of_[x] == class_of_[y]; }
  std::span<const Elem> representatives() const noexcept { return reps_; }
  std::span<const std::size_t> class_indices() const noexcept { return class_of_; }

  // Members of each class, classes by least member, members ascending.
  std::vector<std::vector<Elem>> classes() const;
  ElementSet class_set(std::size_t c) const;

  bool congruence() const noexcept { return congruence_; }
  void mark_congruence(bool flag) noexcept { congruence_ = flag; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<Elem> reps_;
  bool congruence_ = false;
};

class CommSemigroup {
 public:
  // Checks range, commutativity and associativity (in that order) and caches
  // the identity and zero when present. `table` is row-major, n*n entries.
  static CommSemigroup validate(std::size_t n, std::vector<Elem> table,
                                std::vector<std::string> labels = {});
  static CommSemigroup validate(const std::vector<std::vector<Elem>>& rows,
                                std::vector<std::string> labels = {});
  // For tables associative and commutative by construction (ring quotients,
  // quotients by a verified congruence): range-checked only.
  static CommSemigroup from_structure(std::size_t n, std::vector<Elem> table,
                                      std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  std::span<const Elem> row(Elem a) const { return {table_.data() + a * n_, n_}; }
  std::span<const Elem> raw_table() const noexcept { return table_; }

  std::optional<Elem> identity() const noexcept { return identity_; }
  std::optional<Elem> zero() const noexcept { return zero_; }
  bool is_monoid() const noexcept { return identity_.has_value(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem x) const;
  std::optional<Elem> find_label(const std::string& name) const;

  friend bool operator==(const CommSemigroup& a, const CommSemigroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  CommSemigroup() = default;
  void detect_identity_and_zero();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
  std::optional<Elem> identity_;
  std::optional<Elem> zero_;
};

// --- subsets and ideals ---------------------------------------------------

// Nonempty A with S*A inside A. Throws EmptySet for A empty.
bool is_ideal(const CommSemigroup& s, const ElementSet& a);
bool is_subsemigroup(const CommSemigroup& s, const ElementSet& a);

// {x : xA ⊆ A}; all of S when A is empty.
ElementSet idealizer(const CommSemigroup& s, const ElementSet& a);
// Id(A) ∩ Id(S \ A).
ElementSet separator(const CommSemigroup& s, const ElementSet& a);

// The principal ideal {a} ∪ Sa.
ElementSet principal_ideal(const CommSemigroup& s, Elem a);

// Every nonempty ideal, as the union-closure of the principal ideals.
// Output is sorted by (size, bit pattern).
std::vector<ElementSet> enumerate_ideals(const CommSemigroup& s);
std::vector<ElementSet> maximal_ideals(const CommSemigroup& s);
// Throws NotAnIdeal / NotProper.
bool is_prime_ideal(const CommSemigroup& s, const ElementSet& ideal);

// --- congruences ------------------------------------------------------------

PairContext context(const CommSemigroup& s, const ElementSet& h, Elem a);

// P_H. Since x*a*y = a*(x*y), two contexts agree iff a*z and b*z fall on the
// same side of H for every z in S*S; the partition is built from those
// signatures and verified as a congruence before returning.
Partition principal_congruence(const CommSemigroup& s, const ElementSet& h);

bool is_congruence(const CommSemigroup& s, const Partition& p);

struct Quotient {
  CommSemigroup semigroup;
  std::vector<Elem> class_map;  // element -> class index in the quotient
};

// Class c of the quotient is class c of `p`; labels come from representatives.
Quotient quotient(const CommSemigroup& s, const Partition& p);

// --- annihilators ------------------------------------------------------------

ElementSet annihilator(const CommSemigroup& s, Elem x);
// {s : A(s) != {0}}. Needs a zero and |S| >= 2.
ElementSet torsion_set(const CommSemigroup& s);

// --- isomorphism ----------------------------------------------------------

inline constexpr std::size_t kIsoMaxOrder = 12;

// A bijection phi (phi[x] in s2) with phi(xy) = phi(x)phi(y), if any.
std::optional<std::vector<Elem>> iso_check(const CommSemigroup& s1, const CommSemigroup& s2);

// --- helpers ---------------------------------------------------------------

// The sub-table on `keep` (assumed closed), reindexed in ascending order.
CommSemigroup restrict_to(const CommSemigroup& s, const std::vector<Elem>& keep);
// Parses "0,2,5" / "a,b" (labels) / "" or "{}" for the empty set.
ElementSet parse_subset(const CommSemigroup& s, const std::string& text);
std::string format_subset(const CommSemigroup& s, const ElementSet& a);

template <typename Key>
Partition Partition::from_keys(const std::vector<Key>& keys) {
  Partition p;
  p.class_of_.resize(keys.size());
  std::map<Key, std::size_t> seen;
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto [it, fresh] = seen.try_emplace(keys[x], p.reps_.size());
    if (fresh) p.reps_.push_back(static_cast<Elem>(x));
    p.class_of_[x] = it->second;
  }
  return p;
}

}  // namespace sepcong
