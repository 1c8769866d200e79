#pragma once

// The claim-status document: one search per registered claim at fixed
// desk-scale bounds, rendered as deterministic Markdown (no timings), with
// every counterexample embedded as a re-checkable instance document.

#include <string>
#include <vector>

#include "roughmap/search.hpp"

namespace roughmap {

struct StatusPlan {
  ClaimId claim;
  SearchMode mode;
  Bounds bounds;
};

struct StatusEntry {
  StatusPlan plan;
  SearchReport report;
  std::string computed;  // e.g. "refuted", "holds at these bounds"
};

const std::vector<StatusPlan>& status_plans();
std::string computed_status(const SearchReport& report);
std::vector<StatusEntry> compute_claim_status(std::size_t workers = 0);
std::string render_claim_status(const std::vector<StatusEntry>& entries);

}  // namespace roughmap
