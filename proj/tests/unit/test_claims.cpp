#include <doctest.h>

#include <set>

#include "roughmap/claims.hpp"
#include "roughmap/enumeration.hpp"
#include "roughmap/error.hpp"
#include "roughmap/instance_io.hpp"
#include "roughmap/replay.hpp"
#include "roughmap/report_io.hpp"
#include "support.hpp"

using namespace roughmap;

TEST_CASE("registry") {
  const auto claims = list_claims();
  CHECK(claims.size() == 16);
  std::set<std::string_view> names;
  for (const auto& c : claims) {
    names.insert(c.name);
    CHECK(claim_by_name(c.name).id == c.id);
    CHECK(&claim(c.id) == &c);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(names.size() == claims.size());

  CHECK(claim(ClaimId::T31).expected == ExpectedStatus::OpenInNote);
  CHECK(claim(ClaimId::L31_1Fwd).expected == ExpectedStatus::RefutedByPaper);
  CHECK(claim(ClaimId::L32).expected == ExpectedStatus::IllTypedByPaper);
  CHECK(claim(ClaimId::T42_1).expected == ExpectedStatus::HoldsByPaper);
  CHECK(claim(ClaimId::T42_1).shape.map == MapConstraint::Bijective);
  CHECK(claim(ClaimId::T31Refl).shape.map == MapConstraint::Any);
  CHECK(claim(ClaimId::T41_1).shape.needs_subset);
  CHECK(claim(ClaimId::L31_2Eq).shape.fiber_condition);
  for (auto id : {ClaimId::L31_1Fwd, ClaimId::L31_1Bwd, ClaimId::L31_2Inc, ClaimId::L31_3Inc,
                  ClaimId::T41_1, ClaimId::T41_2, ClaimId::T43_1, ClaimId::T43_2})
    CHECK(claim(id).expected == ExpectedStatus::RefutedByPaper);

  CHECK_FALSE(find_claim("T99"));
  try {
    claim_by_name("T99");
    FAIL("expected UnknownClaim");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClaim);
  }
}

TEST_CASE("verdicts on the refinement instance") {
  const Instance in = refinement_instance();

  const Verdict fwd = evaluate(claim(ClaimId::L31_1Fwd), in);
  CHECK(fwd.outcome == Outcome::Fails);
  REQUIRE(fwd.witness);
  CHECK(fwd.witness->violated == "f(R1) <= f(R2)");
  CHECK(fwd.witness->space == Space::Codomain);
  CHECK(fwd.witness->pair == ElementPair{0, 1});

  CHECK(evaluate(claim(ClaimId::L31_2Inc), in).outcome == Outcome::Fails);
  CHECK(evaluate(claim(ClaimId::L31_3Inc), in).outcome == Outcome::Fails);

  const Verdict diff = evaluate(claim(ClaimId::L32), in);
  CHECK(diff.outcome == Outcome::IllTyped);
  CHECK(diff.reason == IllTypedReason::DifferenceNotReflexive);
  CHECK_FALSE(diff.witness);

  // f(R1) is full, f(R2) the identity, so swapping gives a backward failure
  // with its witness in U.
  Instance swapped = in;
  std::swap(swapped.partitions[0], swapped.partitions[1]);
  const Verdict bwd = evaluate(claim(ClaimId::L31_1Bwd), swapped);
  CHECK(bwd.outcome == Outcome::Fails);
  REQUIRE(bwd.witness);
  CHECK(bwd.witness->space == Space::Domain);
  REQUIRE(bwd.witness->pair);
  CHECK_FALSE(in.partitions[0].block_of(bwd.witness->pair->first).contains(bwd.witness->pair->second));

  // R1 refines R2, so the backward direction has a false hypothesis here.
  CHECK(evaluate(claim(ClaimId::L31_1Bwd), in).outcome == Outcome::Vacuous);
}

TEST_CASE("verdicts on the approximation instance") {
  const Instance in = approximation_instance();
  const Verdict lower = evaluate(claim(ClaimId::T41_1), in);
  CHECK(lower.outcome == Outcome::Fails);
  REQUIRE(lower.witness);
  CHECK(lower.witness->element == Element{0});
  REQUIRE(lower.witness->sets.size() == 2);
  CHECK(lower.witness->sets[0] == NamedSet{"f(lower_R X)", Subset::of(2, {0})});
  CHECK(lower.witness->sets[1] == NamedSet{"lower_f(R) f(X)", Subset::empty(2)});

  const Verdict upper = evaluate(claim(ClaimId::T41_2), in);
  CHECK(upper.outcome == Outcome::Fails);
  REQUIRE(upper.witness);
  CHECK(upper.witness->element == Element{1});

  const Verdict t43 = evaluate(claim(ClaimId::T43_1), in);
  CHECK(t43.outcome == Outcome::Fails);
  REQUIRE(t43.witness);
  CHECK(t43.witness->sets.size() == 3);
  CHECK(evaluate(claim(ClaimId::T43_2), in).outcome == Outcome::Fails);

  // T43 needs X definable: {1, 2} is not.
  Instance undefinable = in;
  undefinable.x = Subset::of(4, {0, 1});
  CHECK(evaluate(claim(ClaimId::T43_1), undefinable).outcome == Outcome::Vacuous);

  // f(R) not an equivalence: every degree is 1/2, so f(R) is the plain image,
  // which links a-b and a-c but not b-c.
  const std::vector<std::size_t> table{0, 0, 1, 1, 2, 2};
  Instance bad{numbered_universe(6), lettered_universe(3), SurjMap::make(6, 3, table),
               {support::blocks1(6, {{1, 3}, {2, 5}, {4}, {6}})}, Subset::of(6, {0}), {"R"}};
  CHECK_FALSE(relation_classify(relmap(bad.f, bad.partitions[0])).transitive);
  const Verdict t = evaluate(claim(ClaimId::T41_1), bad);
  CHECK(t.outcome == Outcome::IllTyped);
  CHECK(t.reason == IllTypedReason::RelmapNotEquivalence);
  const Verdict t31 = evaluate(claim(ClaimId::T31), bad);
  CHECK(t31.outcome == Outcome::Fails);
  REQUIRE(t31.witness);
  CHECK(t31.witness->violated == "f(R) transitive");
}

TEST_CASE("T42 holds on the bijective instance for every X") {
  Instance in = bijective_instance();
  for (const Subset& x : all_subsets(4)) {
    in.x = x;
    CHECK(evaluate(claim(ClaimId::T42_1), in).outcome == Outcome::Holds);
    CHECK(evaluate(claim(ClaimId::T42_2), in).outcome == Outcome::Holds);
  }
}

TEST_CASE("shape mismatch is rejected") {
  const Instance approx = approximation_instance();
  std::string why;
  CHECK_FALSE(matches_shape(claim(ClaimId::L31_1Fwd), InstanceView{approx.f, approx.partitions, nullptr}, &why));
  CHECK_FALSE(why.empty());
  try {
    evaluate(claim(ClaimId::L31_1Fwd), approx);
    FAIL("expected BadInstance");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadInstance);
  }

  Instance no_x = approx;
  no_x.x.reset();
  CHECK_THROWS_AS(evaluate(claim(ClaimId::T41_1), no_x), Error);
  // Bijective claims reject a 4 -> 2 map.
  CHECK_THROWS_AS(evaluate(claim(ClaimId::T42_1), approx), Error);
}

TEST_CASE("evaluation is pure and witnesses re-validate") {
  const Instance in = refinement_instance();
  for (const auto& c : list_claims()) {
    if (!matches_shape(c, InstanceView{in.f, in.partitions, nullptr})) continue;
    const Verdict first = evaluate(c, in);
    CHECK(evaluate(c, in) == first);
    if (first.outcome != Outcome::Fails) continue;
    nlohmann::json entry;
    entry["instance"] = instance_to_json(in);
    entry["witness"] = witness_to_json(*first.witness, in);
    const Revalidation r = revalidate_counterexample(c.name, entry);
    const std::string shown = r.detail + " " + entry.dump();
    CHECK_MESSAGE(r.ok, shown);

    // A tampered witness must not re-validate.
    entry["witness"]["violated"] = "something else";
    CHECK_FALSE(revalidate_counterexample(c.name, entry).ok);
  }
}

TEST_CASE("T31 on the refinement instance") {
  const Instance in = refinement_instance();
  // f(R1) and f(R2) are both equivalences.
  CHECK(evaluate(claim(ClaimId::T31), in).outcome == Outcome::Holds);
  CHECK(evaluate(claim(ClaimId::T31Refl), in).outcome == Outcome::Holds);
}
