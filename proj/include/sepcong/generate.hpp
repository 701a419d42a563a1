#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "sepcong/semigroup.hpp"

namespace sepcong {

inline constexpr std::size_t kExhaustiveMaxOrder = 4;

// Calls `visit` once for every commutative associative table on {0..n-1}
// (raw tables, not isomorphism classes), in lexicographic order of the
// upper triangle. Throws SizeLimitExceeded for n > 4.
void for_each_comm_semigroup(std::size_t n, const std::function<void(const CommSemigroup&)>& visit);

std::size_t count_comm_semigroups(std::size_t n);

// Seeded stream of random commutative semigroups of a fixed order. Each table
// comes from a backtracking fill of the upper triangle with a shuffled value
// order, pruning on every associativity triple whose entries are all known.
class RandomCommSemigroups {
 public:
  static constexpr std::size_t kMaxOrder = 8;

  RandomCommSemigroups(std::size_t n, std::uint64_t seed);

  CommSemigroup next();

 private:
  bool fill(std::size_t cell);
  bool locally_associative() const;

  std::size_t n_;
  std::mt19937_64 rng_;
  std::vector<std::pair<Elem, Elem>> cells_;
  std::vector<Elem> table_;
  std::size_t budget_ = 0;
};

}  // namespace sepcong
