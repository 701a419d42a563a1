#pragma once

#include <string>
#include <vector>

#include "sepcong/semigroup.hpp"
#include "sepcong/table_io.hpp"

namespace sepcong::fixtures {

// Monoid {1, 2, 0} with 2*2 = 0. Index order follows the labels.
inline const char* kTable1 =
    "3\n"
    "0 1 2\n"
    "1 2 2\n"
    "2 2 2\n"
    "labels: 1 2 0\n";

// Semilattice {1, 2, 3, 0} with 2*3 = 0.
inline const char* kTable2 =
    "4\n"
    "0 1 2 3\n"
    "1 1 3 3\n"
    "2 3 2 3\n"
    "3 3 3 3\n"
    "labels: 1 2 3 0\n";

inline CommSemigroup table1() { return parse_table(kTable1); }
inline CommSemigroup table2() { return parse_table(kTable2); }

// (Z/n, *), element i is the residue i.
inline CommSemigroup zmod_mult(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>(i * j % n);
  }
  return CommSemigroup::validate(n, std::move(t));
}

// (Z/n, +) as a commutative semigroup (a group).
inline CommSemigroup zmod_add(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return CommSemigroup::validate(n, std::move(t));
}

// Set by labels.
inline ElementSet labelled(const CommSemigroup& s, std::initializer_list<const char*> names) {
  ElementSet out(s.order());
  for (const char* n : names) out.insert(*s.find_label(n));
  return out;
}

inline Elem lab(const CommSemigroup& s, const char* name) { return *s.find_label(name); }

}  // namespace sepcong::fixtures
