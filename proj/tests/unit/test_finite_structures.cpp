#include <doctest.h>

#include "roughmap/enumeration.hpp"
#include "roughmap/error.hpp"
#include "roughmap/finite_structures.hpp"
#include "support.hpp"

using namespace roughmap;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("make_universe") {
  const Universe u = make_universe(6, std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  CHECK(u.size() == 6);
  CHECK(u.label(3) == "4");
  CHECK(u.find("6") == Element{5});
  CHECK_FALSE(u.find("7"));

  const Universe one = make_universe(1);
  CHECK(one.size() == 1);
  CHECK_FALSE(one.has_labels());
  CHECK(one.label(0) == "0");

  CHECK(code_of([] { make_universe(0); }) == Errc::EmptyUniverse);
  CHECK(code_of([] { make_universe(2, std::vector<std::string>{"a", "a"}); }) == Errc::BadLabels);
  CHECK(code_of([] { make_universe(3, std::vector<std::string>{"a", "b"}); }) == Errc::BadLabels);
  CHECK(code_of([] { make_universe(65); }) == Errc::TooLarge);
}

TEST_CASE("subset algebra") {
  // A = {1,2,5,6}, B = {1} in 1-based labels.
  const Subset a = Subset::of(6, {0, 1, 4, 5});
  const Subset b = Subset::of(6, {0});
  const SubsetAlgebra alg = subset_algebra(a, b);
  CHECK(alg.intersection == Subset::of(6, {0}));
  CHECK(alg.cardinality_a == 4);
  CHECK(alg.union_set == a);
  CHECK(alg.difference == Subset::of(6, {1, 4, 5}));
  CHECK(alg.complement_a == Subset::of(6, {2, 3}));
  CHECK_FALSE(alg.a_subset_of_b);
  CHECK(is_subset(b, a));

  CHECK(complement(Subset::empty(4)) == Subset::full(4));
  CHECK(is_subset(a, a));
  CHECK(code_of([&] { unite(a, Subset::empty(5)); }) == Errc::MixedUniverse);
  CHECK(code_of([] { Subset::of(3, {3}); }) == Errc::BadElement);
}

TEST_CASE("relation_classify") {
  const BinRelation full = BinRelation::full(2);
  const Classification c = relation_classify(full);
  CHECK(c.equivalence());
  CHECK(relation_classify(BinRelation::identity(5)).equivalence());

  const std::vector<ElementPair> swap{{0, 1}, {1, 0}};
  const Classification s = relation_classify(BinRelation::from_pairs(2, swap));
  CHECK(s.symmetric);
  CHECK_FALSE(s.reflexive);
  CHECK_FALSE(s.transitive);
  CHECK(s.first_failure() == "reflexivity");
}

TEST_CASE("relation_classify agrees with the triple-loop oracle on all relations over 3 elements") {
  // 2^9 relations.
  for (Mask bits = 0; bits < (Mask{1} << 9); ++bits) {
    BinRelation r(3);
    for (Element i = 0; i < 9; ++i)
      if (bits & bit(i)) r.add(i / 3, i % 3);
    const auto pairs = support::pairs_of(r);
    const Classification c = relation_classify(r);
    CHECK(c.reflexive == oracle::reflexive(pairs, 3));
    CHECK(c.symmetric == oracle::symmetric(pairs));
    CHECK(c.transitive == oracle::transitive(pairs, 3));
    CHECK(support::pairs_of(transitive_closure(r)) == oracle::closure(pairs));
  }
}

TEST_CASE("transitive_closure") {
  const std::vector<ElementPair> chain{{0, 1}, {1, 2}};
  const BinRelation closed = transitive_closure(BinRelation::from_pairs(3, chain));
  CHECK(closed.contains(0, 2));
  CHECK(closed.pair_count() == 3);
  const BinRelation id = BinRelation::identity(4);
  CHECK(transitive_closure(id) == id);

  // R1 | R2 of the refinement instance closes to R2, since R1 refines R2.
  const Partition r1 = support::blocks1(6, {{1}, {2}, {3}, {4, 5, 6}});
  const Partition r2 = support::blocks1(6, {{3}, {1, 2, 4, 5, 6}});
  const BinRelation raw = relation_union_raw(r1, r2);
  CHECK(support::pairs_of(transitive_closure(raw)) == oracle::closure(support::pairs_of(raw)));
  CHECK(transitive_closure(raw) == partition_to_relation(r2));
}

TEST_CASE("partition_from_blocks") {
  const Partition r1 = support::blocks1(6, {{1}, {2}, {3}, {4, 5, 6}});
  CHECK(r1.block_count() == 4);
  CHECK(std::vector<std::uint8_t>(r1.rgs().begin(), r1.rgs().end()) ==
        std::vector<std::uint8_t>{0, 1, 2, 3, 3, 3});

  // Order of blocks and elements is irrelevant.
  CHECK(support::blocks1(6, {{6, 4, 5}, {3}, {2}, {1}}) == r1);

  const Partition id = Partition::identity(4);
  CHECK(std::vector<std::uint8_t>(id.rgs().begin(), id.rgs().end()) ==
        std::vector<std::uint8_t>{0, 1, 2, 3});
  const Partition one = Partition::single_block(4);
  CHECK(std::vector<std::uint8_t>(one.rgs().begin(), one.rgs().end()) ==
        std::vector<std::uint8_t>{0, 0, 0, 0});

  const Universe u = numbered_universe(3);
  CHECK(code_of([&] { partition_from_blocks(u, {{0}, {0, 1}, {2}}); }) == Errc::NotAPartition);
  CHECK(code_of([&] { partition_from_blocks(u, {{0}, {1}}); }) == Errc::NotAPartition);
  CHECK(code_of([&] { partition_from_blocks(u, {{0, 1, 2}, {}}); }) == Errc::NotAPartition);
  const std::vector<std::uint8_t> bad{0, 2, 1};
  CHECK(code_of([&] { Partition::from_rgs(bad); }) == Errc::NotAPartition);
}

TEST_CASE("partition_to_relation and relation_to_partition") {
  const Partition r2 = support::blocks1(6, {{3}, {1, 2, 4, 5, 6}});
  CHECK(partition_to_relation(r2).pair_count() == 26);
  CHECK(partition_to_relation(Partition::identity(5)) == BinRelation::identity(5));

  const std::vector<ElementPair> aa{{0, 0}};
  try {
    relation_to_partition(BinRelation::from_pairs(2, aa));
    FAIL("expected NotEquivalence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotEquivalence);
    CHECK(e.detail() == "reflexivity");
  }
}

TEST_CASE("block_of") {
  const Partition r1 = support::blocks1(6, {{1}, {2}, {3}, {4, 5, 6}});
  CHECK(r1.block_of(4) == Subset::of(6, {3, 4, 5}));
  CHECK(Partition::identity(4).block_of(2) == Subset::of(4, {2}));
  CHECK(Partition::single_block(4).block_of(1) == Subset::full(4));
  CHECK(code_of([&] { r1.block_of(6); }) == Errc::BadElement);
}

TEST_CASE("refines, meet, join and raw union on the refinement instance") {
  const Partition r1 = support::blocks1(6, {{1}, {2}, {3}, {4, 5, 6}});
  const Partition r2 = support::blocks1(6, {{3}, {1, 2, 4, 5, 6}});
  CHECK(refines(r1, r2));
  CHECK_FALSE(refines(r2, r1));
  CHECK(refines(r1, r1));
  CHECK_FALSE(refines(Partition::single_block(3), Partition::identity(3)));
  CHECK(code_of([&] { refines(r1, Partition::identity(5)); }) == Errc::MixedUniverse);

  CHECK(partition_meet(r1, r2) == r1);
  const BinRelation raw = relation_union_raw(r1, r2);
  CHECK(raw == partition_to_relation(r2));
  CHECK(relation_classify(raw).equivalence());
  CHECK(partition_join(Partition::identity(4), Partition::identity(4)) == Partition::identity(4));
}

TEST_CASE("partition laws, exhaustive") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto parts = all_partitions(n);
    for (const auto& p : parts) {
      const BinRelation rel = partition_to_relation(p);
      CHECK(relation_to_partition(rel) == p);
      std::size_t squares = 0;
      for (const auto& b : p.blocks()) squares += b.cardinality() * b.cardinality();
      CHECK(squares == rel.pair_count());
    }
    if (n > 5) continue;
    for (const auto& p : parts)
      for (const auto& q : parts) {
        const BinRelation rp = partition_to_relation(p);
        const BinRelation rq = partition_to_relation(q);
        CHECK(refines(p, q) == is_subrelation(rp, rq));
        CHECK(partition_to_relation(partition_meet(p, q)) == relation_intersection(rp, rq));

        // Both refine the join, and the join refines every common coarsening.
        const Partition j = partition_join(p, q);
        CHECK(refines(p, j));
        CHECK(refines(q, j));
        for (const auto& c : parts)
          if (refines(p, c) && refines(q, c)) CHECK(refines(j, c));
        CHECK(support::pairs_of(partition_to_relation(j)) ==
              oracle::closure(support::pairs_of(relation_union_raw(p, q))));
      }
  }
}
