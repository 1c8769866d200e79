#pragma once

// Lazy, deterministic generators for the search space.
//
//   partitions(n)              restricted-growth strings in lexicographic order
//   subsets(n)                 masks 0 .. 2^n - 1
//   maps(n, m)                 all tables U -> V, lexicographic with element 0
//                              most significant
//   surjections(n, m, false)   the surjective tables of maps(n, m), same order
//   surjections(n, m, true)    one table per relabeling-of-V orbit: the tables
//                              whose first occurrences of codomain values are
//                              increasing (restricted-growth tables using all m
//                              values)
//
// A cursor holds O(n) state and serializes to a short string so a scan can be
// resumed or sharded.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "roughmap/degree_relmap.hpp"
#include "roughmap/finite_structures.hpp"

namespace roughmap {

enum class EnumKind { Partitions, Subsets, Maps, Surjections, CanonicalSurjections };

std::string_view enum_kind_name(EnumKind kind);

class EnumCursor {
 public:
  static EnumCursor partitions(std::size_t n);
  static EnumCursor subsets(std::size_t n);
  static EnumCursor maps(std::size_t n, std::size_t m);
  // Throws NoSurjection when m > n.
  static EnumCursor surjections(std::size_t n, std::size_t m, bool canonical);

  EnumKind kind() const { return kind_; }
  std::size_t domain_size() const { return n_; }
  std::size_t codomain_size() const { return m_; }
  // Number of items already passed over.
  std::uint64_t index() const { return index_; }
  bool done() const { return done_; }
  void advance();

  // Accessors for the current item; each throws BadCursor on the wrong kind or
  // when the cursor is exhausted.
  Partition partition() const;
  Subset subset() const;
  SurjMap map() const;

  std::string serialize() const;
  // Throws BadCursor for malformed text or a state that is not a valid item.
  static EnumCursor deserialize(std::string_view text);

  bool operator==(const EnumCursor&) const = default;

 private:
  EnumCursor(EnumKind kind, std::size_t n, std::size_t m);
  bool accepted() const;
  void step();
  void require(EnumKind kind) const;

  EnumKind kind_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint8_t> digits_;
  Mask mask_ = 0;
  std::uint64_t index_ = 0;
  bool done_ = false;
};

inline EnumCursor partitions_iter(std::size_t n) { return EnumCursor::partitions(n); }
inline EnumCursor subsets_iter(std::size_t n) { return EnumCursor::subsets(n); }
inline EnumCursor surjections_iter(std::size_t n, std::size_t m, bool canonical) {
  return EnumCursor::surjections(n, m, canonical);
}
inline EnumCursor maps_iter(std::size_t n, std::size_t m) { return EnumCursor::maps(n, m); }

std::vector<Partition> all_partitions(std::size_t n);
std::vector<Subset> all_subsets(std::size_t n);
std::vector<SurjMap> all_maps(std::size_t n, std::size_t m);
std::vector<SurjMap> all_surjections(std::size_t n, std::size_t m, bool canonical);

// Closed-form counts, computed without the iterators. Throw TooLarge on
// 64-bit overflow.
std::uint64_t bell_number(std::size_t n);                           // Bell triangle
std::uint64_t stirling2(std::size_t n, std::size_t m);              // S(n, m)
std::uint64_t surjection_count(std::size_t n, std::size_t m);       // m! * S(n, m)
std::uint64_t subset_count(std::size_t n);                          // 2^n

struct Counts {
  std::uint64_t bell;
  std::uint64_t surjections;
  std::uint64_t subsets;
};

Counts count_check(std::size_t n, std::size_t m);

}  // namespace roughmap
