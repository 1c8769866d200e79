#pragma once

#include <set>
#include <vector>

#include "oracles.hpp"
#include "roughmap/degree_relmap.hpp"
#include "roughmap/finite_structures.hpp"

namespace support {

inline oracle::Blocks blocks_of(const roughmap::Partition& p) {
  oracle::Blocks out;
  for (const auto& b : p.blocks()) {
    std::vector<int> block;
    for (auto x : b.elements()) block.push_back(static_cast<int>(x));
    out.push_back(block);
  }
  return out;
}

inline oracle::Pairs pairs_of(const roughmap::BinRelation& r) {
  oracle::Pairs out;
  for (auto [x, y] : r.pairs()) out.insert({static_cast<int>(x), static_cast<int>(y)});
  return out;
}

inline std::vector<int> table_of(const roughmap::SurjMap& f) {
  std::vector<int> out;
  for (auto v : f.table()) out.push_back(v);
  return out;
}

inline std::set<int> set_of(const roughmap::Subset& s) {
  std::set<int> out;
  for (auto x : s.elements()) out.insert(static_cast<int>(x));
  return out;
}

inline roughmap::Subset subset_from(std::size_t n, const std::set<int>& xs) {
  roughmap::Mask m = 0;
  for (int x : xs) m |= roughmap::bit(static_cast<roughmap::Element>(x));
  return roughmap::Subset::from_mask(n, m);
}

// Shorthand for 1-based element lists, matching how worked examples are written.
inline roughmap::Partition blocks1(std::size_t n, std::vector<std::vector<roughmap::Element>> blocks) {
  for (auto& b : blocks)
    for (auto& x : b) --x;
  return roughmap::partition_from_blocks(roughmap::numbered_universe(n), blocks);
}

}  // namespace support
