#include "roughmap/claim_status.hpp"

#include <sstream>

#include "roughmap/format.hpp"
#include "roughmap/instance_io.hpp"
#include "roughmap/report_io.hpp"

namespace roughmap {

const std::vector<StatusPlan>& status_plans() {
  static const std::vector<StatusPlan> plans = [] {
    std::vector<StatusPlan> out;
    for (const Claim& c : list_claims()) {
      StatusPlan p{c.id, SearchMode::Verify, {5, 3}};
      switch (c.expected) {
        case ExpectedStatus::RefutedByPaper: p = {c.id, SearchMode::Falsify, {6, 3}}; break;
        case ExpectedStatus::HoldsByPaper: p.bounds = {5, 5}; break;
        case ExpectedStatus::IllTypedByPaper: p.bounds = {4, 4}; break;
        case ExpectedStatus::OpenInNote:
          if (c.id == ClaimId::T31) p.bounds = {6, 4};
          break;
      }
      out.push_back(p);
    }
    return out;
  }();
  return plans;
}

std::string computed_status(const SearchReport& report) {
  const Tallies& t = report.tallies;
  if (t.fails > 0) return "refuted";
  if (t.total() == 0) return "no instances";
  if (t.holds > 0) return "holds at these bounds";
  if (t.ill_typed == t.total()) return "ill-typed on every instance";
  if (t.ill_typed == 0) return "vacuous on every instance";
  return "never applicable (ill-typed or vacuous)";
}

std::vector<StatusEntry> compute_claim_status(std::size_t workers) {
  std::vector<StatusEntry> out;
  SearchOptions options;
  options.workers = workers;
  options.failure_cap = 1;
  for (const StatusPlan& plan : status_plans()) {
    const Claim& c = claim(plan.claim);
    SearchReport report = plan.mode == SearchMode::Falsify ? falsify(c, plan.bounds, options)
                                                           : verify(c, plan.bounds, options);
    std::string status = computed_status(report);
    out.push_back({plan, std::move(report), std::move(status)});
  }
  return out;
}

namespace {

// Pipes inside a Markdown table cell must be escaped.
std::string table_cell(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render_claim_status(const std::vector<StatusEntry>& entries) {
  std::ostringstream out;
  out << "# Claim status\n\n"
      << "Generated by `roughmap claim-status --out docs/claim-status.md`. Do not edit by hand.\n\n"
      << "Each claim is checked by exhaustive search at the bounds shown. `falsify` stops at the\n"
      << "first counterexample in canonical order (one map per relabeling of V); `verify` scans\n"
      << "every map, partition and subset in bounds. Rows whose literature status is `OpenInNote`\n"
      << "are computed findings at these bounds, not published results.\n\n"
      << "| claim | statement | literature status | search | instances | holds | fails | "
         "ill-typed | vacuous | computed status |\n"
      << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    const Claim& c = claim(e.plan.claim);
    const Tallies& t = e.report.tallies;
    out << "| " << c.name << " | `" << table_cell(c.statement) << "` | " << expected_status_name(c.expected)
        << " | " << (e.plan.mode == SearchMode::Falsify ? "falsify" : "verify") << " \\|U\\|<="
        << e.plan.bounds.max_u << ", \\|V\\|<=" << e.plan.bounds.max_v << " | " << t.total() << " | "
        << t.holds << " | " << t.fails << " | " << t.ill_typed << " | " << t.vacuous << " | "
        << e.computed << " |\n";
  }

  out << "\n## Evidence\n\n"
      << "Each block below is the first failing instance in canonical order. Save the\n"
      << "`instance` object to a file and run `roughmap eval --input FILE --claim ID` to\n"
      << "re-check it.\n";
  for (const auto& e : entries) {
    if (!e.report.first_counterexample) continue;
    const Claim& c = claim(e.plan.claim);
    const Counterexample& cx = *e.report.first_counterexample;
    nlohmann::json entry = {{"claim", c.name},
                            {"instance", instance_to_json(cx.instance)},
                            {"witness", witness_to_json(cx.witness, cx.instance)}};
    out << "\n### " << c.name << "\n\n"
        << format_witness(cx.witness, cx.instance) << "\n\n"
        << "```json\n"
        << entry.dump(2) << "\n```\n";
  }
  return out.str();
}

}  // namespace roughmap
