#pragma once

// Reference implementations for tests. They work on plain std::set / vector
// data and share no code with the library's mask-based routines.

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::set<std::pair<int, int>>;
using Blocks = std::vector<std::vector<int>>;

inline Pairs pairs_of_blocks(const Blocks& blocks) {
  Pairs out;
  for (const auto& b : blocks)
    for (int x : b)
      for (int y : b) out.insert({x, y});
  return out;
}

inline int block_of(const Blocks& blocks, int x) {
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    for (int y : blocks[i])
      if (y == x) return i;
  return -1;
}

inline bool reflexive(const Pairs& r, int n) {
  for (int x = 0; x < n; ++x)
    if (!r.count({x, x})) return false;
  return true;
}

inline bool symmetric(const Pairs& r) {
  for (auto [x, y] : r)
    if (!r.count({y, x})) return false;
  return true;
}

// Triple loop over all (x, y, z).
inline bool transitive(const Pairs& r, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (r.count({x, y}) && r.count({y, z}) && !r.count({x, z})) return false;
  return true;
}

// Adds (x, z) for every (x, y), (y, z) until nothing changes.
inline Pairs closure(Pairs r) {
  for (bool grew = true; grew;) {
    grew = false;
    Pairs next = r;
    for (auto [x, y] : r)
      for (auto [y2, z] : r)
        if (y == y2 && next.insert({x, z}).second) grew = true;
    r = std::move(next);
  }
  return r;
}

// Degree D([x]_R / [x]_f) in lowest terms.
inline std::pair<int, int> reduced_degree(const std::vector<int>& table, const Blocks& blocks, int x) {
  const int n = static_cast<int>(table.size());
  const auto& block = blocks[block_of(blocks, x)];
  int fiber = 0, common = 0;
  for (int y = 0; y < n; ++y) {
    if (table[y] != table[x]) continue;
    ++fiber;
    for (int z : block)
      if (z == y) ++common;
  }
  const int g = std::gcd(common, fiber);
  return {common / g, fiber / g};
}

// The degree-filtered image relation, straight from its set-builder form.
inline Pairs relmap(const std::vector<int>& table, const Blocks& blocks) {
  Pairs out;
  for (auto [x, y] : pairs_of_blocks(blocks))
    if (reduced_degree(table, blocks, x) == reduced_degree(table, blocks, y))
      out.insert({table[x], table[y]});
  return out;
}

inline std::set<int> lower(const Blocks& blocks, const std::set<int>& x) {
  std::set<int> out;
  for (const auto& b : blocks) {
    bool inside = true;
    for (int y : b) inside = inside && x.count(y);
    if (inside) out.insert(b.begin(), b.end());
  }
  return out;
}

inline std::set<int> upper(const Blocks& blocks, const std::set<int>& x) {
  std::set<int> out;
  for (const auto& b : blocks) {
    bool meets = false;
    for (int y : b) meets = meets || x.count(y);
    if (meets) out.insert(b.begin(), b.end());
  }
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// B(n+1) = sum_k C(n, k) B(k).
inline std::uint64_t bell(int n) {
  std::vector<std::uint64_t> b{1};
  for (int i = 0; i < n; ++i) {
    std::uint64_t next = 0;
    for (int k = 0; k <= i; ++k) next += binomial(i, k) * b[k];
    b.push_back(next);
  }
  return b[n];
}

// Inclusion-exclusion: sum_k (-1)^k C(m, k) (m - k)^n.
inline std::int64_t surjections(int n, int m) {
  std::int64_t total = 0;
  for (int k = 0; k <= m; ++k) {
    std::int64_t power = 1;
    for (int i = 0; i < n; ++i) power *= (m - k);
    total += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(binomial(m, k)) * power;
  }
  return total;
}

}  // namespace oracle
