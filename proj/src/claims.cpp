#include "roughmap/claims.hpp"

#include <array>
#include <bit>

#include "roughmap/error.hpp"
#include "roughmap/rough_approx.hpp"

namespace roughmap {

namespace {

constexpr InstanceShape one_partition{1, false, MapConstraint::Surjective, false};
constexpr InstanceShape two_partitions{2, false, MapConstraint::Surjective, false};
constexpr InstanceShape two_partitions_fibered{2, false, MapConstraint::Surjective, true};
constexpr InstanceShape with_subset{1, true, MapConstraint::Surjective, false};
constexpr InstanceShape bijective_with_subset{1, true, MapConstraint::Bijective, false};

constexpr std::array<Claim, 16> kRegistry{{
    {ClaimId::T31, "T31", "f surjective => f(R) is an equivalence relation on V", one_partition,
     ExpectedStatus::OpenInNote, "Gong and Xiao (2010), Theorem 3.1; reflexivity needs surjectivity"},
    {ClaimId::T31Refl, "T31-refl", "f(R) is reflexive on V <=> f is surjective",
     {1, false, MapConstraint::Any, false}, ExpectedStatus::HoldsByPaper,
     "surjectivity requirement on f; a value outside f(U) has no (v, v)"},
    {ClaimId::L31_1Fwd, "L31-1-fwd", "R1 <= R2 => f(R1) <= f(R2)", two_partitions,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Lemma 3.1(1), forward direction"},
    {ClaimId::L31_1Bwd, "L31-1-bwd", "f(R1) <= f(R2) => R1 <= R2", two_partitions,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Lemma 3.1(1), backward direction"},
    {ClaimId::L31_2Inc, "L31-2-inc", "f(R1 & R2) <= f(R1) & f(R2)", two_partitions,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Lemma 3.1(2), inclusion"},
    {ClaimId::L31_2Eq, "L31-2-eq", "[x]_f <= [x]_Ri for all x => f(R1 & R2) = f(R1) & f(R2)",
     two_partitions_fibered, ExpectedStatus::OpenInNote,
     "Gong and Xiao (2010), Lemma 3.1(2), conditional equality"},
    {ClaimId::L31_3Inc, "L31-3-inc", "R1 | R2 equivalence; f(R1 | R2) >= f(R1) | f(R2)",
     two_partitions, ExpectedStatus::RefutedByPaper,
     "Gong and Xiao (2010), Lemma 3.1(3), inclusion"},
    {ClaimId::L31_3Eq, "L31-3-eq",
     "R1 | R2 equivalence; [x]_f <= [x]_Ri for all x => f(R1 | R2) = f(R1) | f(R2)",
     two_partitions_fibered, ExpectedStatus::OpenInNote,
     "Gong and Xiao (2010), Lemma 3.1(3), conditional equality"},
    {ClaimId::L31_3Join, "L31-3-join", "f(join(R1, R2)) >= f(R1) | f(R2)", two_partitions,
     ExpectedStatus::OpenInNote, "Lemma 3.1(3) read with the partition join in place of R1 | R2"},
    {ClaimId::L32, "L32", "[x]_f <= [x]_Ri for all x => f(R1) \\ f(R2) = f(R1 \\ R2)",
     two_partitions_fibered, ExpectedStatus::IllTypedByPaper,
     "Gong and Xiao (2010), Lemma 3.2; R1 \\ R2 is never reflexive"},
    {ClaimId::T41_1, "T41-1", "f(lower_R X) <= lower_f(R) f(X)", with_subset,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Theorem 4.1(1)"},
    {ClaimId::T41_2, "T41-2", "f(upper_R X) >= upper_f(R) f(X)", with_subset,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Theorem 4.1(2)"},
    {ClaimId::T42_1, "T42-1", "f bijective => f(lower_R X) = lower_f(R) f(X)",
     bijective_with_subset, ExpectedStatus::HoldsByPaper, "Gong and Xiao (2010), Theorem 4.2(1)"},
    {ClaimId::T42_2, "T42-2", "f bijective => f(upper_R X) = upper_f(R) f(X)",
     bijective_with_subset, ExpectedStatus::HoldsByPaper, "Gong and Xiao (2010), Theorem 4.2(2)"},
    {ClaimId::T43_1, "T43-1", "X definable => f(lower_R X) = lower_f(R) f(X) = f(X)", with_subset,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Theorem 4.3(1)"},
    {ClaimId::T43_2, "T43-2", "X definable => f(upper_R X) = upper_f(R) f(X) = f(X)", with_subset,
     ExpectedStatus::RefutedByPaper, "Gong and Xiao (2010), Theorem 4.3(2)"},
}};

Verdict holds() { return {Outcome::Holds, std::nullopt, std::nullopt}; }
Verdict vacuous() { return {Outcome::Vacuous, std::nullopt, std::nullopt}; }
Verdict ill_typed(IllTypedReason reason) { return {Outcome::IllTyped, reason, std::nullopt}; }
Verdict fails(Witness w) { return {Outcome::Fails, std::nullopt, std::move(w)}; }

Verdict pair_inclusion(const BinRelation& small, const BinRelation& big, const char* violated,
                       Space space = Space::Codomain) {
  if (auto p = first_pair_missing(small, big)) return fails({violated, space, *p, {}, {}});
  return holds();
}

Verdict pair_equality(const BinRelation& left, const BinRelation& right, const char* le,
                      const char* ge) {
  if (auto p = first_pair_missing(left, right)) return fails({le, Space::Codomain, *p, {}, {}});
  if (auto p = first_pair_missing(right, left)) return fails({ge, Space::Codomain, *p, {}, {}});
  return holds();
}

std::optional<Element> first_element(Mask m) {
  if (m == 0) return std::nullopt;
  return static_cast<Element>(std::countr_zero(m));
}

bool fiber_condition(const SurjMap& f, std::span<const Partition> rs) {
  for (const auto& r : rs)
    if (!fibers_within_blocks(f, r)) return false;
  return true;
}

Verdict relmap_transitivity(const SurjMap& f, const Partition& r) {
  const BinRelation image = relmap(f, r);
  const Classification c = relation_classify(image);
  if (c.equivalence()) return holds();
  const std::size_t m = image.universe_size();
  if (!c.reflexive) {
    for (Element v = 0; v < m; ++v)
      if (!image.contains(v, v))
        return fails({"f(R) reflexive on V", Space::Codomain, ElementPair{v, v}, v, {}});
  }
  if (!c.symmetric) {
    for (Element u = 0; u < m; ++u)
      for (Element v = 0; v < m; ++v)
        if (image.contains(u, v) && !image.contains(v, u))
          return fails({"f(R) symmetric", Space::Codomain, ElementPair{u, v}, std::nullopt, {}});
  }
  // (u, v) and (v, w) present, (u, w) missing: pair (u, w) with middle v.
  for (Element u = 0; u < m; ++u)
    for (Mask vs = image.row(u); vs != 0; vs &= vs - 1) {
      const auto v = static_cast<Element>(std::countr_zero(vs));
      if (auto w = first_element(image.row(v) & ~image.row(u)))
        return fails({"f(R) transitive", Space::Codomain, ElementPair{u, *w}, v, {}});
    }
  return holds();
}

// Set relationships between images of approximations. `kind` selects which
// inclusion must hold between left and right.
enum class SetRelation { Subset, Superset, Equal };

Verdict compare_sets(SetRelation kind, const char* violated, NamedSet left, NamedSet right) {
  const Mask l = left.members.mask();
  const Mask r = right.members.mask();
  std::optional<Element> bad;
  switch (kind) {
    case SetRelation::Subset: bad = first_element(l & ~r); break;
    case SetRelation::Superset: bad = first_element(r & ~l); break;
    case SetRelation::Equal: bad = first_element(l ^ r); break;
  }
  if (!bad) return holds();
  return fails({violated, Space::Codomain, std::nullopt, bad, {std::move(left), std::move(right)}});
}

Verdict evaluate_approx(ClaimId id, const SurjMap& f, const Partition& r, const Subset& x) {
  const BinRelation image = relmap(f, r);
  if (!relation_classify(image).equivalence())
    return ill_typed(IllTypedReason::RelmapNotEquivalence);
  const Partition mapped = relation_to_partition(image);
  const Subset fx = image_subset(f, x);

  const bool lower = id == ClaimId::T41_1 || id == ClaimId::T42_1 || id == ClaimId::T43_1;
  if ((id == ClaimId::T43_1 || id == ClaimId::T43_2) && !is_definable(r, x)) return vacuous();

  NamedSet left = lower ? NamedSet{"f(lower_R X)", image_subset(f, lower_approx(r, x))}
                        : NamedSet{"f(upper_R X)", image_subset(f, upper_approx(r, x))};
  NamedSet right = lower ? NamedSet{"lower_f(R) f(X)", lower_approx(mapped, fx)}
                         : NamedSet{"upper_f(R) f(X)", upper_approx(mapped, fx)};

  switch (id) {
    case ClaimId::T41_1:
      return compare_sets(SetRelation::Subset, "f(lower_R X) <= lower_f(R) f(X)", left, right);
    case ClaimId::T41_2:
      return compare_sets(SetRelation::Superset, "f(upper_R X) >= upper_f(R) f(X)", left, right);
    case ClaimId::T42_1:
      return compare_sets(SetRelation::Equal, "f(lower_R X) = lower_f(R) f(X)", left, right);
    case ClaimId::T42_2:
      return compare_sets(SetRelation::Equal, "f(upper_R X) = upper_f(R) f(X)", left, right);
    default: break;
  }
  // T43: both sides must also equal f(X).
  const char* violated = lower ? "f(lower_R X) = lower_f(R) f(X) = f(X)"
                               : "f(upper_R X) = upper_f(R) f(X) = f(X)";
  auto bad = first_element(left.members.mask() ^ right.members.mask());
  if (!bad) bad = first_element(right.members.mask() ^ fx.mask());
  if (!bad) return holds();
  return fails({violated, Space::Codomain, std::nullopt, bad,
                {std::move(left), std::move(right), NamedSet{"f(X)", fx}}});
}

}  // namespace

std::span<const Claim> list_claims() { return kRegistry; }

const Claim& claim(ClaimId id) {
  for (const auto& c : kRegistry)
    if (c.id == id) return c;
  throw Error(Errc::UnknownClaim, "claim id not in registry");
}

std::optional<ClaimId> find_claim(std::string_view name) {
  for (const auto& c : kRegistry)
    if (c.name == name) return c.id;
  return std::nullopt;
}

const Claim& claim_by_name(std::string_view name) {
  if (auto id = find_claim(name)) return claim(*id);
  throw Error(Errc::UnknownClaim, "unknown claim '" + std::string(name) + "'");
}

std::string_view expected_status_name(ExpectedStatus status) {
  switch (status) {
    case ExpectedStatus::RefutedByPaper: return "RefutedByPaper";
    case ExpectedStatus::HoldsByPaper: return "HoldsByPaper";
    case ExpectedStatus::IllTypedByPaper: return "IllTypedByPaper";
    case ExpectedStatus::OpenInNote: return "OpenInNote";
  }
  return "?";
}

std::string_view map_constraint_name(MapConstraint constraint) {
  switch (constraint) {
    case MapConstraint::Any: return "any";
    case MapConstraint::Surjective: return "surjective";
    case MapConstraint::Bijective: return "bijective";
  }
  return "?";
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::IllTyped: return "IllTyped";
    case Outcome::Vacuous: return "Vacuous";
  }
  return "?";
}

std::string_view ill_typed_reason_name(IllTypedReason reason) {
  switch (reason) {
    case IllTypedReason::UnionNotEquivalence: return "union-not-equivalence";
    case IllTypedReason::DifferenceNotReflexive: return "difference-not-reflexive";
    case IllTypedReason::DifferenceNotEquivalence: return "difference-not-equivalence";
    case IllTypedReason::RelmapNotEquivalence: return "relmap-not-equivalence";
  }
  return "?";
}

bool matches_shape(const Claim& claim, InstanceView instance, std::string* why) {
  auto reject = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  const auto& shape = claim.shape;
  const std::size_t n = instance.f.domain_size();
  if (instance.partitions.size() < shape.partitions)
    return reject("claim needs " + std::to_string(shape.partitions) + " partition(s), instance has " +
                  std::to_string(instance.partitions.size()));
  for (std::size_t i = 0; i < shape.partitions; ++i)
    if (instance.partitions[i].universe_size() != n)
      return reject("partition " + std::to_string(i + 1) + " is not over the map's domain");
  if (shape.needs_subset) {
    if (!instance.x) return reject("claim needs a subset X");
    if (instance.x->universe_size() != n) return reject("X is not a subset of the map's domain");
  }
  switch (shape.map) {
    case MapConstraint::Any: break;
    case MapConstraint::Surjective:
      if (!instance.f.surjective()) return reject("claim needs a surjective map");
      break;
    case MapConstraint::Bijective:
      if (!instance.f.bijective()) return reject("claim needs a bijective map");
      break;
  }
  return true;
}

Verdict evaluate(const Claim& claim, InstanceView instance) {
  std::string why;
  if (!matches_shape(claim, instance, &why))
    throw Error(Errc::BadInstance, std::string(claim.name) + ": " + why);

  const SurjMap& f = instance.f;
  const Partition& r1 = instance.partitions[0];
  const auto used = instance.partitions.first(claim.shape.partitions);

  switch (claim.id) {
    case ClaimId::T31: return relmap_transitivity(f, r1);

    case ClaimId::T31Refl: {
      const BinRelation image = relmap(f, r1);
      const bool reflexive = relation_classify(image).reflexive;
      if (reflexive == f.surjective()) return holds();
      if (reflexive) {
        const auto v = first_element(~f.image_mask() & full_mask(f.codomain_size()));
        return fails({"f(R) reflexive on V => f surjective", Space::Codomain, std::nullopt, v, {}});
      }
      Element v = 0;
      while (image.contains(v, v)) ++v;
      return fails({"f surjective => f(R) reflexive on V", Space::Codomain, ElementPair{v, v}, v,
                    {}});
    }

    case ClaimId::L32: {
      const BinRelation diff = relation_difference_raw(r1, instance.partitions[1]);
      const Classification c = relation_classify(diff);
      if (!c.reflexive) return ill_typed(IllTypedReason::DifferenceNotReflexive);
      if (!c.equivalence()) return ill_typed(IllTypedReason::DifferenceNotEquivalence);
      if (!fiber_condition(f, used)) return vacuous();
      return pair_equality(relation_difference(relmap(f, r1), relmap(f, instance.partitions[1])),
                           relmap(f, relation_to_partition(diff)),
                           "f(R1) \\ f(R2) <= f(R1 \\ R2)", "f(R1) \\ f(R2) >= f(R1 \\ R2)");
    }

    case ClaimId::T41_1:
    case ClaimId::T41_2:
    case ClaimId::T42_1:
    case ClaimId::T42_2:
    case ClaimId::T43_1:
    case ClaimId::T43_2: return evaluate_approx(claim.id, f, r1, *instance.x);

    default: break;
  }

  // Two-partition lattice claims.
  const Partition& r2 = instance.partitions[1];
  switch (claim.id) {
    case ClaimId::L31_1Fwd:
      if (!refines(r1, r2)) return vacuous();
      return pair_inclusion(relmap(f, r1), relmap(f, r2), "f(R1) <= f(R2)");

    case ClaimId::L31_1Bwd:
      if (!is_subrelation(relmap(f, r1), relmap(f, r2))) return vacuous();
      return pair_inclusion(partition_to_relation(r1), partition_to_relation(r2), "R1 <= R2",
                            Space::Domain);

    case ClaimId::L31_2Inc:
    case ClaimId::L31_2Eq: {
      if (claim.id == ClaimId::L31_2Eq && !fiber_condition(f, used)) return vacuous();
      const BinRelation left = relmap(f, partition_meet(r1, r2));
      const BinRelation right = relation_intersection(relmap(f, r1), relmap(f, r2));
      if (claim.id == ClaimId::L31_2Inc)
        return pair_inclusion(left, right, "f(R1 & R2) <= f(R1) & f(R2)");
      return pair_equality(left, right, "f(R1 & R2) <= f(R1) & f(R2)",
                           "f(R1 & R2) >= f(R1) & f(R2)");
    }

    case ClaimId::L31_3Inc:
    case ClaimId::L31_3Eq: {
      const BinRelation raw = relation_union_raw(r1, r2);
      if (!relation_classify(raw).equivalence())
        return ill_typed(IllTypedReason::UnionNotEquivalence);
      if (claim.id == ClaimId::L31_3Eq && !fiber_condition(f, used)) return vacuous();
      const BinRelation left = relmap(f, relation_to_partition(raw));
      const BinRelation right = relation_union(relmap(f, r1), relmap(f, r2));
      if (claim.id == ClaimId::L31_3Inc)
        return pair_inclusion(right, left, "f(R1 | R2) >= f(R1) | f(R2)");
      return pair_equality(left, right, "f(R1 | R2) <= f(R1) | f(R2)",
                           "f(R1 | R2) >= f(R1) | f(R2)");
    }

    case ClaimId::L31_3Join: {
      const BinRelation left = relmap(f, partition_join(r1, r2));
      const BinRelation right = relation_union(relmap(f, r1), relmap(f, r2));
      return pair_inclusion(right, left, "f(join(R1, R2)) >= f(R1) | f(R2)");
    }

    default: break;
  }
  throw Error(Errc::UnknownClaim, "claim has no evaluator");
}

Verdict evaluate(const Claim& claim, const Instance& instance) {
  const Subset* x = instance.x ? &*instance.x : nullptr;
  return evaluate(claim, InstanceView{instance.f, instance.partitions, x});
}

}  // namespace roughmap
