#pragma once

// Exhaustive search over bounded instance spaces.
//
// Instances are visited in canonical order: increasing |U|, then |V|, then
// the map table, then R1 (and R2) in restricted-growth order, then X by mask.
// Work is sharded by map index; per-map results are merged in map order, so
// reports do not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "roughmap/claims.hpp"

namespace roughmap {

enum class SearchMode { Falsify, Verify };

struct Bounds {
  std::size_t max_u = 1;
  std::size_t max_v = 1;

  bool operator==(const Bounds&) const = default;
};

struct SearchOptions {
  std::size_t workers = 0;  // 0: default_worker_count()
  // Enumerate one map per relabeling of V. Defaults to true for falsify and
  // false for verify; maps that need not be surjective are never reduced.
  std::optional<bool> canonical_maps;
  // Failures kept by verify.
  std::size_t failure_cap = 10;
};

struct Tallies {
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t ill_typed = 0;
  std::uint64_t vacuous = 0;

  std::uint64_t total() const { return holds + fails + ill_typed + vacuous; }
  void add(Outcome outcome);
  Tallies& operator+=(const Tallies& other);
  bool operator==(const Tallies&) const = default;
};

struct Counterexample {
  Instance instance;
  Witness witness;
};

struct Effort {
  std::uint64_t levels = 0;  // (|U|, |V|) pairs visited
  std::uint64_t maps = 0;    // work units evaluated
  std::uint64_t instances = 0;
};

struct SearchReport {
  ClaimId claim = ClaimId::T31;
  SearchMode mode = SearchMode::Falsify;
  Bounds bounds;
  bool canonical_maps = true;
  Tallies tallies;
  // Minimal failing instance in canonical order.
  std::optional<Counterexample> first_counterexample;
  // Verify only: failures in canonical order, at most failure_cap of them.
  std::vector<Counterexample> failures;
  bool stopped_early = false;
  Effort effort;
  double elapsed_ms = 0;
};

// ROUGHMAP_WORKERS when set to a positive integer, else the hardware
// concurrency (at least 1).
std::size_t default_worker_count();

// Stops at the first Fails instance; tallies cover everything up to and
// including it.
SearchReport falsify(const Claim& claim, Bounds bounds, const SearchOptions& options = {});
// Scans the whole bounded space.
SearchReport verify(const Claim& claim, Bounds bounds, const SearchOptions& options = {});

// Builds the Instance for generated components (labels 1..n and a, b, ...).
Instance make_generated_instance(const Claim& claim, const SurjMap& f,
                                 std::vector<Partition> partitions, std::optional<Subset> x);

}  // namespace roughmap
