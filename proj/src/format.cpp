#include "roughmap/format.hpp"

#include <sstream>

namespace roughmap {

std::string format_subset(const Subset& s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (Element x : s.elements()) {
    if (!first) out += ", ";
    out += u.label(x);
    first = false;
  }
  return out + "}";
}

std::string format_relation(const BinRelation& rel, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : rel.pairs()) {
    if (!first) out += ", ";
    out += "(" + u.label(x) + ", " + u.label(y) + ")";
    first = false;
  }
  return out + "}";
}

std::string format_partition(const Partition& p, const Universe& u) {
  std::string out = "{";
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b) out += ", ";
    out += format_subset(p.block(b), u);
  }
  return out + "}";
}

std::string format_map(const SurjMap& f, const Universe& u, const Universe& v) {
  std::string out;
  for (Element x = 0; x < f.domain_size(); ++x) {
    if (x) out += ", ";
    out += u.label(x) + "->" + v.label(f.image(x));
  }
  return out;
}

std::string format_witness(const Witness& w, const Instance& instance) {
  const Universe& space = w.space == Space::Domain ? instance.u : instance.v;
  std::ostringstream out;
  out << "violates " << w.violated;
  if (w.pair)
    out << "; pair (" << space.label(w.pair->first) << ", " << space.label(w.pair->second) << ")";
  if (w.element) out << "; element " << space.label(*w.element);
  for (const auto& s : w.sets) out << "; " << s.name << " = " << format_subset(s.members, space);
  return out.str();
}

std::string format_verdict(const Verdict& v, const Instance& instance) {
  std::string out(outcome_name(v.outcome));
  if (v.reason) out += "(" + std::string(ill_typed_reason_name(*v.reason)) + ")";
  if (v.witness) out += ": " + format_witness(*v.witness, instance);
  return out;
}

}  // namespace roughmap
