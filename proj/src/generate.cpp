#include "sepcong/generate.hpp"

#include <algorithm>
#include <numeric>

namespace sepcong {

namespace {

constexpr Elem kUnset = ~Elem{0};

}  // namespace

void for_each_comm_semigroup(std::size_t n,
                             const std::function<void(const CommSemigroup&)>& visit) {
  if (n == 0 || n > kExhaustiveMaxOrder) {
    throw Error(Errc::SizeLimitExceeded, "exhaustive generation covers orders 1..4");
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<Elem> table(n * n, 0);
  std::vector<Elem> digits(cells.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto [a, b] = cells[i];
      table[a * n + b] = table[b * n + a] = digits[i];
    }
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a) {
      for (std::size_t b = 0; b < n && assoc; ++b) {
        const Elem ab = table[a * n + b];
        for (std::size_t c = 0; c < n && assoc; ++c) {
          assoc = table[ab * n + c] == table[a * n + table[b * n + c]];
        }
      }
    }
    if (assoc) visit(CommSemigroup::from_structure(n, table));

    // odometer over the upper triangle, last cell fastest
    std::size_t i = cells.size();
    while (i > 0) {
      --i;
      if (++digits[i] < n) break;
      digits[i] = 0;
      if (i == 0) return;
    }
  }
}

std::size_t count_comm_semigroups(std::size_t n) {
  std::size_t count = 0;
  for_each_comm_semigroup(n, [&](const CommSemigroup&) { ++count; });
  return count;
}

RandomCommSemigroups::RandomCommSemigroups(std::size_t n, std::uint64_t seed)
    : n_(n), rng_(seed) {
  if (n == 0 || n > kMaxOrder) {
    throw Error(Errc::SizeLimitExceeded, "random generation covers orders 1..8");
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) cells_.emplace_back(a, b);
  }
}

CommSemigroup RandomCommSemigroups::next() {
  for (;;) {
    table_.assign(n_ * n_, kUnset);
    std::shuffle(cells_.begin(), cells_.end(), rng_);
    budget_ = 20000;
    if (fill(0)) return CommSemigroup::validate(n_, table_);
  }
}

bool RandomCommSemigroups::fill(std::size_t cell) {
  if (cell == cells_.size()) return true;
  if (budget_-- == 0) return false;
  auto [a, b] = cells_[cell];
  std::vector<Elem> values(n_);
  std::iota(values.begin(), values.end(), Elem{0});
  std::shuffle(values.begin(), values.end(), rng_);
  for (Elem v : values) {
    table_[a * n_ + b] = table_[b * n_ + a] = v;
    if (locally_associative() && fill(cell + 1)) return true;
    if (budget_ == 0) break;
  }
  table_[a * n_ + b] = table_[b * n_ + a] = kUnset;
  return false;
}

// Checks every fully-defined triple; cheap enough at n <= 8 to scan them all.
bool RandomCommSemigroups::locally_associative() const {
  auto at = [&](Elem x, Elem y) { return table_[x * n_ + y]; };
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      const Elem xy = at(x, y);
      if (xy == kUnset) continue;
      for (Elem z = 0; z < n_; ++z) {
        const Elem yz = at(y, z);
        if (yz == kUnset) continue;
        const Elem lhs = at(xy, z);
        const Elem rhs = at(x, yz);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace sepcong
