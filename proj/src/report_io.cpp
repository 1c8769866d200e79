#include "roughmap/report_io.hpp"

#include <fstream>
#include <sstream>

#include "roughmap/error.hpp"
#include "roughmap/format.hpp"
#include "roughmap/instance_io.hpp"

namespace roughmap {

using nlohmann::json;

namespace {

json tallies_to_json(const Tallies& t) {
  return {{"holds", t.holds},         {"fails", t.fails},        {"ill_typed", t.ill_typed},
          {"vacuous", t.vacuous},     {"instances", t.total()}};
}

json counterexample_to_json(const Counterexample& cx) {
  return {{"instance", instance_to_json(cx.instance)},
          {"witness", witness_to_json(cx.witness, cx.instance)},
          {"witness_text", format_witness(cx.witness, cx.instance)}};
}

std::string_view mode_name(SearchMode mode) {
  return mode == SearchMode::Falsify ? "falsify" : "verify";
}

}  // namespace

json witness_to_json(const Witness& w, const Instance& instance) {
  const Universe& space = w.space == Space::Domain ? instance.u : instance.v;
  json out;
  out["violated"] = w.violated;
  out["space"] = w.space == Space::Domain ? "U" : "V";
  if (w.pair) out["pair"] = {element_ref(space, w.pair->first), element_ref(space, w.pair->second)};
  if (w.element) out["element"] = element_ref(space, *w.element);
  if (!w.sets.empty()) {
    json sets = json::array();
    for (const auto& s : w.sets) {
      json members = json::array();
      for (Element x : s.members.elements()) members.push_back(element_ref(space, x));
      sets.push_back({{"name", s.name}, {"members", std::move(members)}});
    }
    out["sets"] = std::move(sets);
  }
  return out;
}

json verdict_to_json(const Verdict& v, const Instance& instance) {
  json out;
  out["outcome"] = outcome_name(v.outcome);
  if (v.reason) out["reason"] = ill_typed_reason_name(*v.reason);
  if (v.witness) out["witness"] = witness_to_json(*v.witness, instance);
  return out;
}

json report_to_json(const SearchReport& report) {
  const Claim& c = claim(report.claim);
  json out;
  out["schema"] = kReportSchema;
  out["tool_version"] = kToolVersion;
  out["mode"] = mode_name(report.mode);
  out["claim"] = c.name;
  out["statement"] = c.statement;
  out["expected_status"] = expected_status_name(c.expected);
  out["bounds"] = {{"max_u", report.bounds.max_u}, {"max_v", report.bounds.max_v}};
  out["canonical_maps"] = report.canonical_maps;
  out["tallies"] = tallies_to_json(report.tallies);
  out["stopped_early"] = report.stopped_early;
  out["first_counterexample"] =
      report.first_counterexample ? counterexample_to_json(*report.first_counterexample) : json();
  if (report.mode == SearchMode::Verify) {
    json failures = json::array();
    for (const auto& cx : report.failures) failures.push_back(counterexample_to_json(cx));
    out["failures"] = std::move(failures);
  }
  if (report.tallies.total() == 0) out["note"] = "no instances within these bounds";
  out["effort"] = {{"levels", report.effort.levels},
                   {"maps", report.effort.maps},
                   {"instances", report.effort.instances}};
  out["wall_time_ms"] = report.elapsed_ms;
  return out;
}

std::string render_report(const SearchReport& report) {
  const Claim& c = claim(report.claim);
  const Tallies& t = report.tallies;
  std::ostringstream out;
  out << mode_name(report.mode) << " " << c.name << ": " << c.statement << "\n";
  out << "  bounds: |U| <= " << report.bounds.max_u << ", |V| <= " << report.bounds.max_v
      << (report.canonical_maps ? " (one map per relabeling of V)" : " (all maps)") << "\n";
  out << "  instances: " << t.total() << "  holds " << t.holds << "  fails " << t.fails
      << "  ill-typed " << t.ill_typed << "  vacuous " << t.vacuous << "\n";
  if (t.total() == 0) out << "  note: no instances within these bounds\n";

  auto print_cx = [&](const Counterexample& cx) {
    const Instance& in = cx.instance;
    out << "    U = " << format_subset(Subset::full(in.u.size()), in.u)
        << ", V = " << format_subset(Subset::full(in.v.size()), in.v) << "\n";
    out << "    f: " << format_map(in.f, in.u, in.v) << "\n";
    for (std::size_t i = 0; i < in.partitions.size(); ++i) {
      const std::string& name = in.partition_names[i];
      out << "    " << name << " = " << format_partition(in.partitions[i], in.u) << "\n";
      out << "    f(" << name << ") = " << format_relation(relmap(in.f, in.partitions[i]), in.v)
          << "\n";
    }
    if (in.x) out << "    X = " << format_subset(*in.x, in.u) << "\n";
    out << "    " << format_witness(cx.witness, in) << "\n";
  };

  if (report.mode == SearchMode::Falsify) {
    if (report.first_counterexample) {
      out << "  counterexample (first in canonical order):\n";
      print_cx(*report.first_counterexample);
    } else {
      out << "  no counterexample within these bounds\n";
    }
  } else if (report.failures.empty()) {
    out << "  no failures: every well-typed instance with a true hypothesis holds\n";
  } else {
    out << "  failures (first " << report.failures.size() << " in canonical order):\n";
    for (const auto& cx : report.failures) print_cx(cx);
  }
  return out.str();
}

void emit_report(const SearchReport& report, std::ostream& text,
                 const std::optional<std::filesystem::path>& json_path) {
  text << render_report(report);
  if (!json_path) return;
  std::ofstream file(*json_path);
  if (!file) throw Error(Errc::IoError, "cannot write " + json_path->string());
  file << report_to_json(report).dump(2) << "\n";
  if (!file) throw Error(Errc::IoError, "failed writing " + json_path->string());
}

Revalidation revalidate_counterexample(std::string_view claim_name, const json& entry) {
  try {
    const Instance instance = instance_from_json(entry.at("instance"));
    const Verdict v = evaluate(claim_by_name(claim_name), instance);
    if (v.outcome != Outcome::Fails)
      return {false, "re-evaluation gave " + std::string(outcome_name(v.outcome))};
    const json again = witness_to_json(*v.witness, instance);
    if (again != entry.at("witness"))
      return {false, "witness differs: " + again.dump() + " vs " + entry.at("witness").dump()};
    return {true, format_witness(*v.witness, instance)};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace roughmap
