#pragma once

// Search reports: a text rendering for humans and a JSON document
// ("roughmap/report/v1") for machines. The JSON embeds any counterexample as
// an instance document next to its witness, so it can be fed back to `eval`.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "roughmap/search.hpp"

namespace roughmap {

inline constexpr std::string_view kReportSchema = "roughmap/report/v1";
inline constexpr std::string_view kToolVersion = "0.1.0";

nlohmann::json witness_to_json(const Witness& w, const Instance& instance);
nlohmann::json verdict_to_json(const Verdict& v, const Instance& instance);
nlohmann::json report_to_json(const SearchReport& report);
std::string render_report(const SearchReport& report);

// Writes the text form to `text` and, when given, the JSON document to
// `json_path`. Throws IoError when the file cannot be written.
void emit_report(const SearchReport& report, std::ostream& text,
                 const std::optional<std::filesystem::path>& json_path = std::nullopt);

struct Revalidation {
  bool ok = false;
  std::string detail;
};

// Re-parses an embedded {"instance", "witness"} entry, evaluates `claim_name`
// on it and checks that the verdict is Fails with the identical witness.
Revalidation revalidate_counterexample(std::string_view claim_name, const nlohmann::json& entry);

}  // namespace roughmap
