#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "roughmap/error.hpp"
#include "roughmap/instance_io.hpp"
#include "roughmap/replay.hpp"
#include "roughmap/report_io.hpp"
#include "support.hpp"

using namespace roughmap;

namespace {

const char* kRefinementDoc = R"({
  "schema": "roughmap/instance/v1",
  "universe_u": ["1", "2", "3", "4", "5", "6"],
  "universe_v": ["a", "b"],
  "map": {"1": "a", "2": "a", "3": "b", "4": "b", "5": "a", "6": "a"},
  "partitions": [
    {"name": "R1", "blocks": [["1"], ["2"], ["3"], ["4", "5", "6"]]},
    {"name": "R2", "blocks": [["3"], ["1", "2", "4", "5", "6"]]}
  ]
})";

Error error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(Errc::IoError, "");
}

std::string with(std::string doc, const std::string& from, const std::string& to) {
  doc.replace(doc.find(from), from.size(), to);
  return doc;
}

}  // namespace

TEST_CASE("parse the refinement document") {
  const Instance in = parse_instance(kRefinementDoc);
  const Instance expected = refinement_instance();
  CHECK(in.u == expected.u);
  CHECK(in.v == expected.v);
  CHECK(in.f == expected.f);
  CHECK(in.partitions == expected.partitions);
  CHECK(in.partition_names == std::vector<std::string>{"R1", "R2"});
  CHECK_FALSE(in.x);
}

TEST_CASE("integer references and sized universes") {
  const Instance in = parse_instance(R"({
    "universe_u": 4, "universe_v": 2, "map": [0, 0, 1, 1],
    "partitions": [{"blocks": [[0], [1, 2], [3]]}], "subset_x": [0]})");
  CHECK(in.u.size() == 4);
  CHECK_FALSE(in.u.has_labels());
  CHECK(in.partitions[0] == support::blocks1(4, {{1}, {2, 3}, {4}}));
  CHECK(in.x == Subset::of(4, {0}));
  CHECK(in.partition_names == std::vector<std::string>{"R1"});
}

TEST_CASE("validation errors name the field") {
  const Error overlap = error_of(with(kRefinementDoc, R"([["3"], ["1", "2", "4", "5", "6"]])",
                                     R"([["3", "1"], ["1", "2", "4", "5", "6"]])"));
  CHECK(overlap.code() == Errc::ValidationError);
  CHECK(overlap.detail() == "partitions[1].blocks");

  const Error total = error_of(with(kRefinementDoc, R"(, "6": "a"})", "}"));
  CHECK(total.code() == Errc::ValidationError);
  CHECK(total.detail() == "map");

  const Error label = error_of(with(kRefinementDoc, R"("5": "a")", R"("5": "z")"));
  CHECK(label.code() == Errc::ValidationError);
  CHECK(std::string(label.what()).find("'z'") != std::string::npos);

  const Error dup = error_of(with(kRefinementDoc, R"(["a", "b"])", R"(["a", "a"])"));
  CHECK(dup.code() == Errc::ValidationError);
  CHECK(dup.detail() == "universe_v");

  CHECK(error_of(with(kRefinementDoc, "roughmap/instance/v1", "other/v9")).detail() == "schema");
}

TEST_CASE("malformed JSON reports a byte offset") {
  const Error e = error_of(R"({"universe_u": [1, 2,)");
  CHECK(e.code() == Errc::ParseError);
  CHECK(e.detail().rfind("byte ", 0) == 0);
}

TEST_CASE("instances round-trip") {
  for (const Instance& in : {refinement_instance(), approximation_instance(), bijective_instance()}) {
    const Instance back = instance_from_json(nlohmann::json::parse(instance_to_json(in).dump()));
    CHECK(back.u == in.u);
    CHECK(back.v == in.v);
    CHECK(back.f == in.f);
    CHECK(back.partitions == in.partitions);
    CHECK(back.partition_names == in.partition_names);
    CHECK(back.x == in.x);
  }
}

TEST_CASE("report documents") {
  SearchOptions options;
  options.workers = 1;
  const SearchReport report = falsify(claim(ClaimId::L31_1Fwd), {6, 3}, options);
  const nlohmann::json doc = nlohmann::json::parse(report_to_json(report).dump());
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["claim"] == "L31-1-fwd");
  CHECK(doc["mode"] == "falsify");
  CHECK(doc["tallies"]["fails"] == 1);
  REQUIRE(doc.contains("first_counterexample"));
  const Revalidation r = revalidate_counterexample("L31-1-fwd", doc["first_counterexample"]);
  CHECK_MESSAGE(r.ok, r.detail);

  // The embedded instance re-parses to the searched one.
  const Instance in = instance_from_json(doc["first_counterexample"]["instance"]);
  CHECK(in.f == report.first_counterexample->instance.f);
  CHECK(in.partitions == report.first_counterexample->instance.partitions);
}

TEST_CASE("an empty search says so") {
  SearchReport report;
  report.claim = ClaimId::T42_1;
  report.mode = SearchMode::Verify;
  const nlohmann::json doc = report_to_json(report);
  CHECK(doc["tallies"]["holds"] == 0);
  CHECK(doc["note"] == "no instances within these bounds");
  CHECK(doc["first_counterexample"].is_null());
  CHECK(render_report(report).find("no instances within these bounds") != std::string::npos);
}

TEST_CASE("emit_report writes JSON or raises IoError") {
  SearchReport report;
  std::ostringstream text;
  const auto path = std::filesystem::temp_directory_path() / "roughmap_test_report.json";
  emit_report(report, text, path);
  CHECK(std::filesystem::exists(path));
  CHECK_FALSE(text.str().empty());
  std::filesystem::remove(path);

  try {
    emit_report(report, text, std::filesystem::path("/nonexistent-dir/report.json"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}
