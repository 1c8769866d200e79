#include "roughmap/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "roughmap/claim_status.hpp"
#include "roughmap/enumeration.hpp"
#include "roughmap/error.hpp"
#include "roughmap/format.hpp"
#include "roughmap/instance_io.hpp"
#include "roughmap/replay.hpp"
#include "roughmap/report_io.hpp"
#include "roughmap/rough_approx.hpp"

namespace roughmap {

namespace {

void print_registry(std::ostream& out) {
  for (const Claim& c : list_claims()) {
    out << std::left << std::setw(11) << c.name << std::setw(16) << expected_status_name(c.expected)
        << c.statement << "\n";
    out << std::string(27, ' ') << "shape: " << c.shape.partitions << " partition(s)"
        << (c.shape.needs_subset ? ", subset X" : "") << ", "
        << map_constraint_name(c.shape.map) << " map"
        << (c.shape.fiber_condition ? ", fiber condition" : "") << "; source: " << c.anchor
        << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw Error(Errc::IoError, "cannot write " + path);
  file << content;
  if (!file) throw Error(Errc::IoError, "failed writing " + path);
}

// Accepts an instance document, a report document (its first
// counterexample), or an evidence entry ({"instance": ...}).
Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": malformed JSON: " + e.what(),
                "byte " + std::to_string(e.byte));
  }
  if (doc.is_object() && doc.contains("first_counterexample")) {
    if (doc["first_counterexample"].is_null())
      throw Error(Errc::ValidationError, path + ": report has no counterexample", "first_counterexample");
    return instance_from_json(doc["first_counterexample"].at("instance"));
  }
  if (doc.is_object() && doc.contains("instance")) return instance_from_json(doc["instance"]);
  return instance_from_json(doc);
}

std::set<std::string> split_show(const std::string& show) {
  std::set<std::string> out;
  std::stringstream in(show);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

int cmd_eval(const std::string& input, const std::string& show, const std::string& claim_name,
             const std::string& json_path, std::ostream& out) {
  const Instance in = load_instance(input);
  const auto sections = split_show(show);
  for (const auto& s : sections)
    if (s != "relmap" && s != "approx" && s != "degrees")
      throw Error(Errc::ValidationError, "--show accepts relmap, approx, degrees; got '" + s + "'",
                  "--show");

  out << "U = " << format_subset(Subset::full(in.u.size()), in.u) << "\n";
  out << "V = " << format_subset(Subset::full(in.v.size()), in.v) << "\n";
  out << "f: " << format_map(in.f, in.u, in.v) << " ("
      << (in.f.bijective() ? "bijective" : in.f.surjective() ? "surjective" : "not surjective")
      << ")\n";
  for (std::size_t i = 0; i < in.partitions.size(); ++i)
    out << in.partition_names[i] << " = " << format_partition(in.partitions[i], in.u) << "\n";
  if (in.x) out << "X = " << format_subset(*in.x, in.u) << "\n";

  if (sections.count("relmap")) {
    out << "\nrelmap:\n";
    for (std::size_t i = 0; i < in.partitions.size(); ++i) {
      const BinRelation image = relmap(in.f, in.partitions[i]);
      const Classification c = relation_classify(image);
      out << "  f(" << in.partition_names[i] << ") = " << format_relation(image, in.v) << "  ["
          << (c.equivalence() ? "equivalence" : "not an equivalence: " + std::string(c.first_failure()) + " fails")
          << "]\n";
    }
  }
  if (sections.count("degrees")) {
    out << "\ndegrees D([x]_R / [x]_f):\n";
    for (std::size_t i = 0; i < in.partitions.size(); ++i) {
      const auto& name = in.partition_names[i];
      out << "  " << name << ":";
      const auto degrees = element_degrees(in.f, in.partitions[i]);
      for (Element x = 0; x < degrees.size(); ++x)
        out << (x ? ", " : " ") << in.u.label(x) << " " << degrees[x].num << "/" << degrees[x].den;
      out << "\n";
    }
  }
  if (sections.count("approx")) {
    out << "\napprox:\n";
    if (!in.x) {
      out << "  (no subset_x in the instance)\n";
    } else {
      const Subset fx = image_subset(in.f, *in.x);
      out << "  f(X) = " << format_subset(fx, in.v) << "\n";
      for (std::size_t i = 0; i < in.partitions.size(); ++i) {
        const auto& name = in.partition_names[i];
        const Partition& r = in.partitions[i];
        const Subset lo = lower_approx(r, *in.x);
        const Subset up = upper_approx(r, *in.x);
        out << "  lower_" << name << " X = " << format_subset(lo, in.u) << ", upper_" << name
            << " X = " << format_subset(up, in.u)
            << (is_definable(r, *in.x) ? "  (X definable)" : "") << "\n";
        out << "  f(lower_" << name << " X) = " << format_subset(image_subset(in.f, lo), in.v)
            << ", f(upper_" << name << " X) = " << format_subset(image_subset(in.f, up), in.v)
            << "\n";
        const BinRelation image = relmap(in.f, r);
        if (relation_classify(image).equivalence()) {
          const Partition mapped = relation_to_partition(image);
          out << "  lower_f(" << name << ") f(X) = " << format_subset(lower_approx(mapped, fx), in.v)
              << ", upper_f(" << name << ") f(X) = "
              << format_subset(upper_approx(mapped, fx), in.v) << "\n";
        } else {
          out << "  approximations over f(" << name << ") undefined: not an equivalence\n";
        }
      }
    }
  }

  std::vector<const Claim*> selected;
  if (!claim_name.empty()) {
    selected.push_back(&claim_by_name(claim_name));
  } else {
    for (const Claim& c : list_claims()) selected.push_back(&c);
  }

  nlohmann::json verdicts = nlohmann::json::object();
  out << "\nverdicts:\n";
  for (const Claim* c : selected) {
    const Subset* x = in.x ? &*in.x : nullptr;
    std::string why;
    out << "  " << std::left << std::setw(11) << c->name;
    if (!matches_shape(*c, InstanceView{in.f, in.partitions, x}, &why)) {
      if (!claim_name.empty()) throw Error(Errc::BadInstance, std::string(c->name) + ": " + why);
      out << "not applicable: " << why << "\n";
      continue;
    }
    const Verdict v = evaluate(*c, in);
    out << format_verdict(v, in) << "\n";
    verdicts[std::string(c->name)] = verdict_to_json(v, in);
  }
  if (!json_path.empty()) {
    nlohmann::json doc = {{"instance", instance_to_json(in)}, {"verdicts", verdicts}};
    write_file(json_path, doc.dump(2) + "\n");
  }
  return kExitExpected;
}

int search_exit_code(const SearchReport& report) {
  const ExpectedStatus expected = claim(report.claim).expected;
  if (report.mode == SearchMode::Verify)
    return report.tallies.fails == 0 ? kExitExpected : kExitUnexpected;
  if (report.first_counterexample)
    return expected == ExpectedStatus::HoldsByPaper ? kExitUnexpected : kExitExpected;
  return expected == ExpectedStatus::RefutedByPaper ? kExitUnexpected : kExitNoneFound;
}

int cmd_search(SearchMode mode, const std::string& claim_name, Bounds bounds,
               std::size_t workers, std::size_t max_failures, const std::string& json_path,
               std::ostream& out) {
  const Claim& c = claim_by_name(claim_name);
  SearchOptions options;
  options.workers = workers;
  options.failure_cap = max_failures;
  const SearchReport report =
      mode == SearchMode::Falsify ? falsify(c, bounds, options) : verify(c, bounds, options);
  std::optional<std::filesystem::path> path;
  if (!json_path.empty()) path = json_path;
  emit_report(report, out, path);
  return search_exit_code(report);
}

int cmd_count(std::size_t partitions, const std::vector<std::size_t>& surjections,
              std::size_t subsets, std::ostream& out) {
  constexpr std::uint64_t kIterationLimit = 10'000'000;
  bool ok = true;
  auto report = [&](const std::string& what, std::uint64_t formula, const char* formula_name,
                    auto make_cursor) {
    out << what << ": " << formula << " (" << formula_name << ")";
    if (formula <= kIterationLimit) {
      std::uint64_t iterated = 0;
      for (auto c = make_cursor(); !c.done(); c.advance()) ++iterated;
      out << ", iterator " << iterated << (iterated == formula ? "  ok" : "  MISMATCH");
      ok = ok && iterated == formula;
    } else {
      out << ", too many to iterate";
    }
    out << "\n";
  };
  if (partitions)
    report("partitions(" + std::to_string(partitions) + ")", bell_number(partitions),
           "Bell triangle", [&] { return EnumCursor::partitions(partitions); });
  if (!surjections.empty()) {
    const std::size_t n = surjections[0], m = surjections[1];
    report("surjections(" + std::to_string(n) + ", " + std::to_string(m) + ")",
           surjection_count(n, m), "m! * S(n, m)",
           [&] { return EnumCursor::surjections(n, m, false); });
    report("canonical surjections(" + std::to_string(n) + ", " + std::to_string(m) + ")",
           stirling2(n, m), "S(n, m)", [&] { return EnumCursor::surjections(n, m, true); });
  }
  if (subsets)
    report("subsets(" + std::to_string(subsets) + ")", subset_count(subsets), "2^n",
           [&] { return EnumCursor::subsets(subsets); });
  return ok ? kExitExpected : kExitUnexpected;
}

int cmd_claim_status(const std::string& out_path, std::size_t workers, std::ostream& out) {
  const auto entries = compute_claim_status(workers);
  const std::string doc = render_claim_status(entries);
  if (!out_path.empty()) {
    write_file(out_path, doc);
    out << "wrote " << out_path << "\n";
  }
  bool consistent = true;
  for (const auto& e : entries) {
    const Claim& c = claim(e.plan.claim);
    out << std::left << std::setw(11) << c.name << std::setw(16) << expected_status_name(c.expected)
        << e.computed << "\n";
    switch (c.expected) {
      case ExpectedStatus::RefutedByPaper: consistent &= e.computed == "refuted"; break;
      case ExpectedStatus::HoldsByPaper: consistent &= e.computed == "holds at these bounds"; break;
      case ExpectedStatus::IllTypedByPaper:
        consistent &= e.computed == "ill-typed on every instance";
        break;
      case ExpectedStatus::OpenInNote: break;
    }
  }
  return consistent ? kExitExpected : kExitUnexpected;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-filtered relation mappings, rough approximations and claim search",
               "roughmap"};
  app.require_subcommand(1);

  auto* replay = app.add_subcommand("replay-paper", "Recompute the published worked instances");

  std::string input, show, eval_claim, eval_json;
  auto* eval = app.add_subcommand("eval", "Evaluate claims on an instance document");
  eval->add_option("--input", input, "Instance document (or report / evidence entry)")->required();
  eval->add_option("--show", show, "Comma-separated: relmap,approx,degrees");
  eval->add_option("--claim", eval_claim, "Evaluate only this claim");
  eval->add_option("--json", eval_json, "Write verdicts as JSON");

  std::string search_claim, search_json;
  std::size_t max_u = 0, max_v = 0, workers = default_worker_count(), max_failures = 10;
  auto add_search_options = [&](CLI::App* cmd, bool v_required) {
    cmd->add_option("claim", search_claim, "Claim id (see list-claims)")->required();
    cmd->add_option("--max-u", max_u, "Largest |U|")->required()->check(CLI::Range(1, 8));
    auto* mv = cmd->add_option("--max-v", max_v, "Largest |V|")->check(CLI::Range(1, 8));
    if (v_required) mv->required();
    cmd->add_option("--json", search_json, "Write the report document");
    cmd->add_option("--workers", workers, "Worker threads (default: $ROUGHMAP_WORKERS or cores)")
        ->check(CLI::PositiveNumber);
  };
  auto* falsify_cmd = app.add_subcommand("falsify", "Search for the first counterexample");
  add_search_options(falsify_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "Scan the whole bounded space");
  add_search_options(verify_cmd, false);
  verify_cmd->add_option("--max-failures", max_failures, "Failures listed in the report");

  auto* list = app.add_subcommand("list-claims", "Print the claim registry");

  std::size_t count_partitions = 0, count_subsets = 0;
  std::vector<std::size_t> count_surjections;
  auto* count = app.add_subcommand("count", "Cross-check enumerator counts against formulas");
  count->add_option("--partitions", count_partitions, "Partitions of N")->check(CLI::Range(1, 25));
  count->add_option("--surjections", count_surjections, "Surjections N M")
      ->expected(2)
      ->check(CLI::Range(1, 20));
  count->add_option("--subsets", count_subsets, "Subsets of N")->check(CLI::Range(1, 63));
  count->require_option(1);

  std::string status_out;
  auto* status = app.add_subcommand("claim-status", "Search every claim and render the status document");
  status->add_option("--out", status_out, "Markdown file to write");
  status->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitExpected : kExitUsage;
  }

  try {
    if (replay->parsed()) {
      const ReplayReport report = replay_paper();
      out << render_replay(report);
      return report.pass() ? kExitExpected : kExitUnexpected;
    }
    if (eval->parsed()) return cmd_eval(input, show, eval_claim, eval_json, out);
    if (falsify_cmd->parsed())
      return cmd_search(SearchMode::Falsify, search_claim, {max_u, max_v}, workers, max_failures,
                        search_json, out);
    if (verify_cmd->parsed())
      return cmd_search(SearchMode::Verify, search_claim, {max_u, max_v ? max_v : max_u}, workers,
                        max_failures, search_json, out);
    if (list->parsed()) {
      print_registry(out);
      return kExitExpected;
    }
    if (count->parsed()) {
      if (!count_surjections.empty() && count_surjections[1] > count_surjections[0])
        throw Error(Errc::NoSurjection, "no surjection onto a larger codomain");
      return cmd_count(count_partitions, count_surjections, count_subsets, out);
    }
    if (status->parsed()) return cmd_claim_status(status_out, workers, out);
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    if (e.code() == Errc::UnknownClaim) {
      err << "known claims:\n";
      print_registry(err);
    }
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace roughmap
