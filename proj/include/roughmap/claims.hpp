#pragma once

// Executable statements about the degree-filtered relation mapping.
//
// Each claim is evaluated on one instance and yields a four-valued verdict:
//
//   IllTyped  an object the statement needs is not an equivalence relation
//             (f applied to R1 | R2 or R1 \ R2, or an approximation over a
//             mapped relation f(R) that is not an equivalence)
//   Vacuous   well-typed, but the hypothesis is false
//   Holds     hypothesis and conclusion true
//   Fails     hypothesis true, conclusion false; carries a witness
//
// Type checks run first, then the hypothesis, then the conclusion, so an
// approximation over a non-equivalence is never formed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughmap/degree_relmap.hpp"
#include "roughmap/finite_structures.hpp"

namespace roughmap {

enum class ClaimId {
  T31,
  T31Refl,
  L31_1Fwd,
  L31_1Bwd,
  L31_2Inc,
  L31_2Eq,
  L31_3Inc,
  L31_3Eq,
  L31_3Join,
  L32,
  T41_1,
  T41_2,
  T42_1,
  T42_2,
  T43_1,
  T43_2,
};

enum class ExpectedStatus { RefutedByPaper, HoldsByPaper, IllTypedByPaper, OpenInNote };

enum class MapConstraint { Any, Surjective, Bijective };

struct InstanceShape {
  std::size_t partitions = 1;  // R, or R1 and R2
  bool needs_subset = false;   // X
  MapConstraint map = MapConstraint::Surjective;
  // Hypothesis [x]_f <= [x]_Ri for every x and every partition involved.
  bool fiber_condition = false;
};

struct Claim {
  ClaimId id;
  std::string_view name;  // stable id, e.g. "L31-1-fwd"
  std::string_view statement;
  InstanceShape shape;
  ExpectedStatus expected;
  std::string_view anchor;  // where the statement comes from
};

std::span<const Claim> list_claims();
const Claim& claim(ClaimId id);
// Throws UnknownClaim.
const Claim& claim_by_name(std::string_view name);
std::optional<ClaimId> find_claim(std::string_view name);

std::string_view expected_status_name(ExpectedStatus status);
std::string_view map_constraint_name(MapConstraint constraint);

struct Instance {
  Universe u;
  Universe v;
  SurjMap f;
  std::vector<Partition> partitions;
  std::optional<Subset> x;
  // Display names for the partitions; defaults to R1, R2, ...
  std::vector<std::string> partition_names;
};

// Lightweight borrowed form used by the search loops.
struct InstanceView {
  const SurjMap& f;
  std::span<const Partition> partitions;
  const Subset* x = nullptr;
};

enum class Outcome { Holds, Fails, IllTyped, Vacuous };

enum class IllTypedReason {
  UnionNotEquivalence,
  DifferenceNotReflexive,
  DifferenceNotEquivalence,
  RelmapNotEquivalence,
};

std::string_view outcome_name(Outcome outcome);
std::string_view ill_typed_reason_name(IllTypedReason reason);

enum class Space { Domain, Codomain };

struct NamedSet {
  std::string name;
  Subset members;

  bool operator==(const NamedSet&) const = default;
};

struct Witness {
  // The relationship that failed, in ASCII notation, e.g. "f(R1) <= f(R2)".
  std::string violated;
  // Which universe pair and element refer to.
  Space space = Space::Codomain;
  std::optional<ElementPair> pair;
  std::optional<Element> element;
  // Computed sides of a violated set relationship.
  std::vector<NamedSet> sets;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  Outcome outcome = Outcome::Holds;
  std::optional<IllTypedReason> reason;
  std::optional<Witness> witness;

  bool operator==(const Verdict&) const = default;
};

// True when the instance has what the claim needs: enough partitions over
// f's domain, X when required, and a map meeting the constraint. `why`
// receives the first mismatch.
bool matches_shape(const Claim& claim, InstanceView instance, std::string* why = nullptr);

// Throws BadInstance when the instance does not match the claim's shape.
Verdict evaluate(const Claim& claim, InstanceView instance);
Verdict evaluate(const Claim& claim, const Instance& instance);

}  // namespace roughmap
