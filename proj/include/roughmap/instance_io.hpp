#pragma once

// Instance documents (JSON).
//
//   {
//     "schema": "roughmap/instance/v1",
//     "universe_u": ["1", "2", "3", "4"],        // or a size, e.g. 4
//     "universe_v": ["a", "b"],
//     "map": ["a", "a", "b", "b"],               // per element of U, or an
//                                                // object {"1": "a", ...}
//     "partitions": [
//       {"name": "R", "blocks": [["1"], ["2", "3"], ["4"]]}
//     ],
//     "subset_x": ["1"]                          // optional
//   }
//
// Element references are label strings, or integer indices (0-based). A
// universe given as a size has no labels, so its elements are referenced by
// index only.

#include <string_view>

#include <json.hpp>

#include "roughmap/claims.hpp"

namespace roughmap {

inline constexpr std::string_view kInstanceSchema = "roughmap/instance/v1";

// Throws ParseError (with the byte offset) for malformed JSON and
// ValidationError (with the field path as detail) for semantic problems.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& instance);

// Element reference in the document style of `u`: label string or index.
nlohmann::json element_ref(const Universe& u, Element x);

}  // namespace roughmap
