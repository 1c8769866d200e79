#pragma once

// Finite universes, subsets, binary relations and set partitions.
//
// Elements are dense indices 0..n-1. A subset is a 64-bit membership mask, a
// binary relation is one mask per row, and an equivalence relation is stored
// canonically as a restricted-growth string (rgs[0] = 0, rgs[i] <= 1 + max of
// the prefix). Display labels live only on Universe; every other type carries
// just the universe size, which is what mixed-universe checks compare.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roughmap {

using Mask = std::uint64_t;
using Element = std::size_t;
using ElementPair = std::pair<Element, Element>;

inline constexpr std::size_t kMaxElements = 64;

inline constexpr Mask bit(Element x) { return Mask{1} << x; }

inline constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

class Universe {
 public:
  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Label of x, or its decimal index when the universe is unlabeled.
  std::string label(Element x) const;
  std::optional<Element> find(std::string_view label) const;

  bool operator==(const Universe&) const = default;

 private:
  friend Universe make_universe(std::size_t, std::optional<std::vector<std::string>>);
  Universe(std::size_t size, std::vector<std::string> labels)
      : size_(size), labels_(std::move(labels)) {}

  std::size_t size_;
  std::vector<std::string> labels_;
};

// Throws EmptyUniverse for size 0, TooLarge above kMaxElements and BadLabels
// for a label list of the wrong length or with duplicates.
Universe make_universe(std::size_t size,
                       std::optional<std::vector<std::string>> labels = std::nullopt);

// Universes labeled "1".."n" and "a","b",... respectively; the notation used
// for generated instances.
Universe numbered_universe(std::size_t size);
Universe lettered_universe(std::size_t size);

class Subset {
 public:
  static Subset empty(std::size_t n);
  static Subset full(std::size_t n);
  static Subset of(std::size_t n, std::initializer_list<Element> xs);
  static Subset of(std::size_t n, std::span<const Element> xs);
  static Subset from_mask(std::size_t n, Mask bits);

  std::size_t universe_size() const { return n_; }
  Mask mask() const { return bits_; }
  std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(Element x) const { return x < n_ && (bits_ & bit(x)) != 0; }
  std::vector<Element> elements() const;

  bool operator==(const Subset&) const = default;

 private:
  Subset(std::uint8_t n, Mask bits) : n_(n), bits_(bits) {}

  std::uint8_t n_ = 0;
  Mask bits_ = 0;
};

// Set algebra. Binary operations throw MixedUniverse on a size mismatch.
Subset unite(const Subset& a, const Subset& b);
Subset intersect(const Subset& a, const Subset& b);
Subset minus(const Subset& a, const Subset& b);
Subset complement(const Subset& a);
bool is_subset(const Subset& a, const Subset& b);

struct SubsetAlgebra {
  Subset union_set;
  Subset intersection;
  Subset difference;
  Subset complement_a;
  std::size_t cardinality_a;
  bool a_subset_of_b;
};

SubsetAlgebra subset_algebra(const Subset& a, const Subset& b);

class BinRelation {
 public:
  explicit BinRelation(std::size_t n);

  static BinRelation identity(std::size_t n);
  static BinRelation full(std::size_t n);
  static BinRelation from_pairs(std::size_t n, std::span<const ElementPair> pairs);

  std::size_t universe_size() const { return n_; }
  bool contains(Element x, Element y) const {
    return x < n_ && y < n_ && (rows_[x] & bit(y)) != 0;
  }
  // Row x as a mask: {y | (x, y) in the relation}.
  Mask row(Element x) const { return rows_[x]; }
  std::size_t pair_count() const;

  // Pairs in display order: the diagonal first, then the remaining pairs in
  // row-major order. This is the order the text formatter prints.
  std::vector<ElementPair> pairs() const;

  // Construction-time insertion; throws BadElement when out of range.
  void add(Element x, Element y);
  void add_unchecked(Element x, Element y) { rows_[x] |= bit(y); }

  bool operator==(const BinRelation&) const = default;

 private:
  std::uint8_t n_;
  std::array<Mask, kMaxElements> rows_{};
};

struct Classification {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;

  bool equivalence() const { return reflexive && symmetric && transitive; }
  // "reflexivity", "symmetry", "transitivity", or empty for an equivalence.
  std::string_view first_failure() const;
};

Classification relation_classify(const BinRelation& rel);
BinRelation transitive_closure(const BinRelation& rel);

BinRelation relation_union(const BinRelation& a, const BinRelation& b);
BinRelation relation_intersection(const BinRelation& a, const BinRelation& b);
BinRelation relation_difference(const BinRelation& a, const BinRelation& b);
bool is_subrelation(const BinRelation& a, const BinRelation& b);

// First pair of `a` missing from `b`, in display order.
std::optional<ElementPair> first_pair_missing(const BinRelation& a, const BinRelation& b);

class Partition {
 public:
  // Validates that `rgs` is a restricted-growth string; throws NotAPartition.
  static Partition from_rgs(std::span<const std::uint8_t> rgs);
  // Canonicalizes an arbitrary block labeling (block_ids[x] names x's block).
  static Partition from_block_ids(std::span<const std::size_t> block_ids);
  static Partition identity(std::size_t n);
  static Partition single_block(std::size_t n);

  std::size_t universe_size() const { return n_; }
  std::size_t block_count() const { return block_count_; }
  std::span<const std::uint8_t> rgs() const { return {rgs_.data(), n_}; }

  std::size_t block_index(Element x) const { return rgs_[x]; }
  Mask block_mask(std::size_t i) const { return blocks_[i]; }
  Mask block_mask_of(Element x) const { return blocks_[rgs_[x]]; }

  Subset block(std::size_t i) const;
  std::vector<Subset> blocks() const;
  // [x]_R; throws BadElement when x is out of range.
  Subset block_of(Element x) const;

  bool operator==(const Partition&) const = default;

 private:
  Partition() = default;

  std::uint8_t n_ = 0;
  std::uint8_t block_count_ = 0;
  std::array<std::uint8_t, kMaxElements> rgs_{};
  std::array<Mask, kMaxElements> blocks_{};
};

// Blocks must be nonempty, disjoint and cover the universe; the order of
// blocks and of elements within them does not affect the result.
Partition partition_from_blocks(const Universe& universe,
                                const std::vector<std::vector<Element>>& blocks);

BinRelation partition_to_relation(const Partition& p);
// Throws NotEquivalence with the failed condition as detail.
Partition relation_to_partition(const BinRelation& rel);

// Every block of p lies inside a block of q (equivalently pairs(p) <= pairs(q)).
bool refines(const Partition& p, const Partition& q);
Partition partition_meet(const Partition& p, const Partition& q);
Partition partition_join(const Partition& p, const Partition& q);
// The literal pair-set union and difference; neither need be an equivalence.
BinRelation relation_union_raw(const Partition& p, const Partition& q);
BinRelation relation_difference_raw(const Partition& p, const Partition& q);

}  // namespace roughmap
