#include "roughmap/instance_io.hpp"

#include "roughmap/error.hpp"

namespace roughmap {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(Errc::ValidationError, field + ": " + what, field);
}

Universe read_universe(const json& doc, const char* field) {
  if (!doc.contains(field)) invalid(field, "missing");
  const json& node = doc.at(field);
  try {
    if (node.is_number_unsigned() || node.is_number_integer()) {
      const auto size = node.get<long long>();
      if (size <= 0) invalid(field, "universe must be nonempty");
      return make_universe(static_cast<std::size_t>(size));
    }
    if (node.is_array()) {
      std::vector<std::string> labels;
      for (const auto& l : node) {
        if (!l.is_string()) invalid(field, "labels must be strings");
        labels.push_back(l.get<std::string>());
      }
      if (labels.empty()) invalid(field, "universe must be nonempty");
      const std::size_t size = labels.size();
      return make_universe(size, std::move(labels));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::ValidationError) throw;
    invalid(field, e.what());
  }
  invalid(field, "expected a size or a list of labels");
}

Element read_element(const Universe& u, const json& ref, const std::string& field) {
  if (ref.is_string()) {
    if (auto x = u.find(ref.get<std::string>())) return *x;
    invalid(field, "unknown label '" + ref.get<std::string>() + "'");
  }
  if (ref.is_number_integer() || ref.is_number_unsigned()) {
    const auto x = ref.get<long long>();
    if (x < 0 || static_cast<std::size_t>(x) >= u.size())
      invalid(field, "index " + std::to_string(x) + " out of range");
    return static_cast<Element>(x);
  }
  invalid(field, "element references are label strings or integer indices");
}

std::vector<Element> read_elements(const Universe& u, const json& node, const std::string& field) {
  if (!node.is_array()) invalid(field, "expected a list of elements");
  std::vector<Element> out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(read_element(u, node[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

SurjMap read_map(const json& doc, const Universe& u, const Universe& v) {
  if (!doc.contains("map")) invalid("map", "missing");
  const json& node = doc.at("map");
  std::vector<std::size_t> table(u.size());
  if (node.is_array()) {
    if (node.size() != u.size())
      invalid("map", "has " + std::to_string(node.size()) + " entries, U has " +
                         std::to_string(u.size()) + " elements (map must be total)");
    for (std::size_t i = 0; i < node.size(); ++i)
      table[i] = read_element(v, node[i], "map[" + std::to_string(i) + "]");
  } else if (node.is_object()) {
    std::vector<bool> seen(u.size(), false);
    for (const auto& [key, value] : node.items()) {
      Element x = 0;
      if (auto found = u.find(key)) {
        x = *found;
      } else if (!u.has_labels() && !key.empty() &&
                 key.find_first_not_of("0123456789") == std::string::npos &&
                 std::stoull(key) < u.size()) {
        x = static_cast<Element>(std::stoull(key));
      } else {
        invalid("map", "unknown domain element '" + key + "'");
      }
      table[x] = read_element(v, value, "map." + key);
      seen[x] = true;
    }
    for (std::size_t x = 0; x < u.size(); ++x)
      if (!seen[x]) invalid("map", "no image for element " + u.label(x) + " (map must be total)");
  } else {
    invalid("map", "expected a list or an object");
  }
  return make_map(u, v, table);
}

}  // namespace

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) invalid("document", "expected a JSON object");
  if (doc.contains("schema")) {
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kInstanceSchema)
      invalid("schema", "expected \"" + std::string(kInstanceSchema) + "\"");
  }
  Universe u = read_universe(doc, "universe_u");
  Universe v = read_universe(doc, "universe_v");
  SurjMap f = read_map(doc, u, v);

  std::vector<Partition> partitions;
  std::vector<std::string> names;
  if (doc.contains("partitions")) {
    const json& node = doc["partitions"];
    if (!node.is_array()) invalid("partitions", "expected a list");
    for (std::size_t i = 0; i < node.size(); ++i) {
      const std::string field = "partitions[" + std::to_string(i) + "]";
      const json& entry = node[i];
      if (!entry.is_object() || !entry.contains("blocks"))
        invalid(field, "expected {\"name\": ..., \"blocks\": [...]}");
      std::string name = "R" + std::to_string(i + 1);
      if (entry.contains("name")) {
        if (!entry["name"].is_string()) invalid(field + ".name", "expected a string");
        name = entry["name"].get<std::string>();
      }
      const json& blocks_node = entry["blocks"];
      if (!blocks_node.is_array()) invalid(field + ".blocks", "expected a list of blocks");
      std::vector<std::vector<Element>> blocks;
      for (std::size_t b = 0; b < blocks_node.size(); ++b)
        blocks.push_back(read_elements(u, blocks_node[b],
                                       field + ".blocks[" + std::to_string(b) + "]"));
      try {
        partitions.push_back(partition_from_blocks(u, blocks));
      } catch (const Error& e) {
        throw Error(Errc::ValidationError, field + ".blocks: " + e.what() + " (" + e.detail() + ")",
                    field + ".blocks");
      }
      names.push_back(std::move(name));
    }
  }

  std::optional<Subset> x;
  if (doc.contains("subset_x") && !doc["subset_x"].is_null()) {
    const auto members = read_elements(u, doc["subset_x"], "subset_x");
    x = Subset::of(u.size(), members);
  }
  return Instance{std::move(u), std::move(v), f, std::move(partitions), x, std::move(names)};
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what(),
                "byte " + std::to_string(e.byte));
  }
  return instance_from_json(doc);
}

json element_ref(const Universe& u, Element x) {
  if (u.has_labels()) return u.label(x);
  return x;
}

json instance_to_json(const Instance& instance) {
  auto universe = [](const Universe& u) -> json {
    if (u.has_labels()) return u.labels();
    return u.size();
  };
  auto elements = [&](const Subset& s) {
    json out = json::array();
    for (Element x : s.elements()) out.push_back(element_ref(instance.u, x));
    return out;
  };

  json doc;
  doc["schema"] = kInstanceSchema;
  doc["universe_u"] = universe(instance.u);
  doc["universe_v"] = universe(instance.v);
  json map = json::array();
  for (Element x = 0; x < instance.f.domain_size(); ++x)
    map.push_back(element_ref(instance.v, instance.f.image(x)));
  doc["map"] = std::move(map);
  json parts = json::array();
  for (std::size_t i = 0; i < instance.partitions.size(); ++i) {
    json blocks = json::array();
    for (const auto& block : instance.partitions[i].blocks()) blocks.push_back(elements(block));
    const std::string name = i < instance.partition_names.size() ? instance.partition_names[i]
                                                                  : "R" + std::to_string(i + 1);
    parts.push_back({{"name", name}, {"blocks", std::move(blocks)}});
  }
  doc["partitions"] = std::move(parts);
  if (instance.x) doc["subset_x"] = elements(*instance.x);
  return doc;
}

}  // namespace roughmap
