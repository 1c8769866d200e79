#include "roughmap/finite_structures.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "roughmap/error.hpp"

namespace roughmap {

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyUniverse, "universe must be nonempty");
  if (n > kMaxElements)
    throw Error(Errc::TooLarge, "universe of size " + std::to_string(n) +
                                    " exceeds the limit of " +
                                    std::to_string(kMaxElements));
}

void check_same(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(Errc::MixedUniverse, "operands live in universes of size " +
                                         std::to_string(a) + " and " +
                                         std::to_string(b));
}

void check_element(Element x, std::size_t n) {
  if (x >= n)
    throw Error(Errc::BadElement, "element " + std::to_string(x) +
                                      " outside universe of size " +
                                      std::to_string(n));
}

}  // namespace

std::string Universe::label(Element x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

std::optional<Element> Universe::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Universe make_universe(std::size_t size, std::optional<std::vector<std::string>> labels) {
  check_size(size);
  std::vector<std::string> names;
  if (labels) {
    if (labels->size() != size)
      throw Error(Errc::BadLabels, "expected " + std::to_string(size) + " labels, got " +
                                       std::to_string(labels->size()));
    std::unordered_set<std::string> seen;
    for (const auto& l : *labels)
      if (!seen.insert(l).second) throw Error(Errc::BadLabels, "duplicate label '" + l + "'");
    names = std::move(*labels);
  }
  return Universe(size, std::move(names));
}

Universe numbered_universe(std::size_t size) {
  check_size(size);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i + 1));
  return make_universe(size, std::move(labels));
}

Universe lettered_universe(std::size_t size) {
  check_size(size);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) {
    if (size <= 26)
      labels.emplace_back(1, static_cast<char>('a' + i));
    else
      labels.push_back("v" + std::to_string(i + 1));
  }
  return make_universe(size, std::move(labels));
}

// ---------------------------------------------------------------- Subset

Subset Subset::empty(std::size_t n) {
  check_size(n);
  return Subset(static_cast<std::uint8_t>(n), 0);
}

Subset Subset::full(std::size_t n) {
  check_size(n);
  return Subset(static_cast<std::uint8_t>(n), full_mask(n));
}

Subset Subset::of(std::size_t n, std::initializer_list<Element> xs) {
  return of(n, std::span<const Element>(xs.begin(), xs.size()));
}

Subset Subset::of(std::size_t n, std::span<const Element> xs) {
  check_size(n);
  Mask bits = 0;
  for (Element x : xs) {
    check_element(x, n);
    bits |= bit(x);
  }
  return Subset(static_cast<std::uint8_t>(n), bits);
}

Subset Subset::from_mask(std::size_t n, Mask bits) {
  check_size(n);
  if ((bits & ~full_mask(n)) != 0)
    throw Error(Errc::BadElement, "mask has members outside universe of size " +
                                      std::to_string(n));
  return Subset(static_cast<std::uint8_t>(n), bits);
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for (Mask m = bits_; m != 0; m &= m - 1)
    out.push_back(static_cast<Element>(std::countr_zero(m)));
  return out;
}

Subset unite(const Subset& a, const Subset& b) {
  check_same(a.universe_size(), b.universe_size());
  return Subset::from_mask(a.universe_size(), a.mask() | b.mask());
}

Subset intersect(const Subset& a, const Subset& b) {
  check_same(a.universe_size(), b.universe_size());
  return Subset::from_mask(a.universe_size(), a.mask() & b.mask());
}

Subset minus(const Subset& a, const Subset& b) {
  check_same(a.universe_size(), b.universe_size());
  return Subset::from_mask(a.universe_size(), a.mask() & ~b.mask());
}

Subset complement(const Subset& a) {
  return Subset::from_mask(a.universe_size(), full_mask(a.universe_size()) & ~a.mask());
}

bool is_subset(const Subset& a, const Subset& b) {
  check_same(a.universe_size(), b.universe_size());
  return (a.mask() & ~b.mask()) == 0;
}

SubsetAlgebra subset_algebra(const Subset& a, const Subset& b) {
  return {unite(a, b), intersect(a, b), minus(a, b), complement(a), a.cardinality(),
          is_subset(a, b)};
}

// ----------------------------------------------------------- BinRelation

BinRelation::BinRelation(std::size_t n) : n_(0) {
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
}

BinRelation BinRelation::identity(std::size_t n) {
  BinRelation r(n);
  for (Element x = 0; x < n; ++x) r.rows_[x] = bit(x);
  return r;
}

BinRelation BinRelation::full(std::size_t n) {
  BinRelation r(n);
  for (Element x = 0; x < n; ++x) r.rows_[x] = full_mask(n);
  return r;
}

BinRelation BinRelation::from_pairs(std::size_t n, std::span<const ElementPair> pairs) {
  BinRelation r(n);
  for (auto [x, y] : pairs) r.add(x, y);
  return r;
}

std::size_t BinRelation::pair_count() const {
  std::size_t total = 0;
  for (std::size_t x = 0; x < n_; ++x) total += static_cast<std::size_t>(std::popcount(rows_[x]));
  return total;
}

std::vector<ElementPair> BinRelation::pairs() const {
  std::vector<ElementPair> out;
  for (Element x = 0; x < n_; ++x)
    if (rows_[x] & bit(x)) out.emplace_back(x, x);
  for (Element x = 0; x < n_; ++x)
    for (Mask m = rows_[x] & ~bit(x); m != 0; m &= m - 1)
      out.emplace_back(x, static_cast<Element>(std::countr_zero(m)));
  return out;
}

void BinRelation::add(Element x, Element y) {
  check_element(x, n_);
  check_element(y, n_);
  add_unchecked(x, y);
}

std::string_view Classification::first_failure() const {
  if (!reflexive) return "reflexivity";
  if (!symmetric) return "symmetry";
  if (!transitive) return "transitivity";
  return {};
}

Classification relation_classify(const BinRelation& rel) {
  const std::size_t n = rel.universe_size();
  Classification c{true, true, true};
  for (Element x = 0; x < n; ++x) {
    const Mask row = rel.row(x);
    if (!(row & bit(x))) c.reflexive = false;
    for (Mask m = row; m != 0; m &= m - 1) {
      const auto y = static_cast<Element>(std::countr_zero(m));
      if (!(rel.row(y) & bit(x))) c.symmetric = false;
      // (x,y) and (y,z) force (x,z): row(y) must sit inside row(x).
      if (rel.row(y) & ~row) c.transitive = false;
    }
  }
  return c;
}

BinRelation transitive_closure(const BinRelation& rel) {
  // Warshall over row masks.
  BinRelation out = rel;
  const std::size_t n = rel.universe_size();
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (out.row(i) & bit(k))
        for (Mask m = out.row(k); m != 0; m &= m - 1)
          out.add_unchecked(i, static_cast<Element>(std::countr_zero(m)));
  return out;
}

namespace {

template <typename Op>
BinRelation combine(const BinRelation& a, const BinRelation& b, Op op) {
  check_same(a.universe_size(), b.universe_size());
  BinRelation out(a.universe_size());
  for (Element x = 0; x < a.universe_size(); ++x)
    for (Mask m = op(a.row(x), b.row(x)); m != 0; m &= m - 1)
      out.add_unchecked(x, static_cast<Element>(std::countr_zero(m)));
  return out;
}

}  // namespace

BinRelation relation_union(const BinRelation& a, const BinRelation& b) {
  return combine(a, b, [](Mask l, Mask r) { return l | r; });
}

BinRelation relation_intersection(const BinRelation& a, const BinRelation& b) {
  return combine(a, b, [](Mask l, Mask r) { return l & r; });
}

BinRelation relation_difference(const BinRelation& a, const BinRelation& b) {
  return combine(a, b, [](Mask l, Mask r) { return l & ~r; });
}

bool is_subrelation(const BinRelation& a, const BinRelation& b) {
  check_same(a.universe_size(), b.universe_size());
  for (Element x = 0; x < a.universe_size(); ++x)
    if (a.row(x) & ~b.row(x)) return false;
  return true;
}

std::optional<ElementPair> first_pair_missing(const BinRelation& a, const BinRelation& b) {
  check_same(a.universe_size(), b.universe_size());
  const std::size_t n = a.universe_size();
  for (Element x = 0; x < n; ++x)
    if ((a.row(x) & ~b.row(x)) & bit(x)) return ElementPair{x, x};
  for (Element x = 0; x < n; ++x) {
    const Mask m = a.row(x) & ~b.row(x) & ~bit(x);
    if (m) return ElementPair{x, static_cast<Element>(std::countr_zero(m))};
  }
  return std::nullopt;
}

// ------------------------------------------------------------- Partition

Partition Partition::from_rgs(std::span<const std::uint8_t> rgs) {
  check_size(rgs.size());
  Partition p;
  p.n_ = static_cast<std::uint8_t>(rgs.size());
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] > blocks || (i == 0 && rgs[i] != 0))
      throw Error(Errc::NotAPartition, "not a restricted-growth string at position " +
                                           std::to_string(i));
    if (rgs[i] == blocks) ++blocks;
    p.rgs_[i] = rgs[i];
    p.blocks_[rgs[i]] |= bit(i);
  }
  p.block_count_ = static_cast<std::uint8_t>(blocks);
  return p;
}

Partition Partition::from_block_ids(std::span<const std::size_t> block_ids) {
  check_size(block_ids.size());
  std::array<std::uint8_t, kMaxElements> rgs{};
  std::vector<std::pair<std::size_t, std::uint8_t>> seen;
  for (std::size_t i = 0; i < block_ids.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& s) { return s.first == block_ids[i]; });
    if (it == seen.end()) {
      seen.emplace_back(block_ids[i], static_cast<std::uint8_t>(seen.size()));
      rgs[i] = seen.back().second;
    } else {
      rgs[i] = it->second;
    }
  }
  return from_rgs(std::span<const std::uint8_t>(rgs.data(), block_ids.size()));
}

Partition Partition::identity(std::size_t n) {
  check_size(n);
  std::vector<std::uint8_t> rgs(n);
  std::iota(rgs.begin(), rgs.end(), std::uint8_t{0});
  return from_rgs(rgs);
}

Partition Partition::single_block(std::size_t n) {
  check_size(n);
  std::vector<std::uint8_t> rgs(n, 0);
  return from_rgs(rgs);
}

Subset Partition::block(std::size_t i) const {
  if (i >= block_count_)
    throw Error(Errc::BadElement, "block index " + std::to_string(i) + " out of range");
  return Subset::from_mask(n_, blocks_[i]);
}

std::vector<Subset> Partition::blocks() const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < block_count_; ++i) out.push_back(Subset::from_mask(n_, blocks_[i]));
  return out;
}

Subset Partition::block_of(Element x) const {
  check_element(x, n_);
  return Subset::from_mask(n_, block_mask_of(x));
}

Partition partition_from_blocks(const Universe& universe,
                                const std::vector<std::vector<Element>>& blocks) {
  const std::size_t n = universe.size();
  std::vector<std::size_t> ids(n, 0);
  Mask covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw Error(Errc::NotAPartition, "block " + std::to_string(b) + " is empty", "empty-block");
    for (Element x : blocks[b]) {
      if (x >= n)
        throw Error(Errc::NotAPartition, "element " + std::to_string(x) + " outside universe",
                    "bad-element");
      if (covered & bit(x))
        throw Error(Errc::NotAPartition,
                    "element " + universe.label(x) + " appears in more than one block", "overlap");
      covered |= bit(x);
      ids[x] = b;
    }
  }
  if (covered != full_mask(n)) {
    const auto missing = static_cast<Element>(std::countr_zero(~covered & full_mask(n)));
    throw Error(Errc::NotAPartition, "element " + universe.label(missing) + " is in no block",
                "gap");
  }
  return Partition::from_block_ids(ids);
}

BinRelation partition_to_relation(const Partition& p) {
  BinRelation r(p.universe_size());
  for (Element x = 0; x < p.universe_size(); ++x)
    for (Mask m = p.block_mask_of(x); m != 0; m &= m - 1)
      r.add_unchecked(x, static_cast<Element>(std::countr_zero(m)));
  return r;
}

Partition relation_to_partition(const BinRelation& rel) {
  const Classification c = relation_classify(rel);
  if (!c.equivalence())
    throw Error(Errc::NotEquivalence,
                "relation is not an equivalence: " + std::string(c.first_failure()) + " fails",
                std::string(c.first_failure()));
  // For an equivalence, row x is exactly [x]; the smallest member names the block.
  std::vector<std::size_t> ids(rel.universe_size());
  for (Element x = 0; x < rel.universe_size(); ++x)
    ids[x] = static_cast<std::size_t>(std::countr_zero(rel.row(x)));
  return Partition::from_block_ids(ids);
}

bool refines(const Partition& p, const Partition& q) {
  check_same(p.universe_size(), q.universe_size());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const Mask block = p.block_mask(b);
    const auto first = static_cast<Element>(std::countr_zero(block));
    if (block & ~q.block_mask_of(first)) return false;
  }
  return true;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  check_same(p.universe_size(), q.universe_size());
  std::vector<std::size_t> ids(p.universe_size());
  for (Element x = 0; x < ids.size(); ++x)
    ids[x] = p.block_index(x) * kMaxElements + q.block_index(x);
  return Partition::from_block_ids(ids);
}

Partition partition_join(const Partition& p, const Partition& q) {
  return relation_to_partition(transitive_closure(relation_union_raw(p, q)));
}

BinRelation relation_union_raw(const Partition& p, const Partition& q) {
  return relation_union(partition_to_relation(p), partition_to_relation(q));
}

BinRelation relation_difference_raw(const Partition& p, const Partition& q) {
  return relation_difference(partition_to_relation(p), partition_to_relation(q));
}

}  // namespace roughmap
