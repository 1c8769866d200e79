#pragma once

// Text rendering with universe labels. Relations print as pair sets with the
// diagonal first, e.g. "{(a, a), (b, b), (a, b), (b, a)}"; sets as "{1, 4}"
// and the empty set as "{}".

#include <string>

#include "roughmap/claims.hpp"

namespace roughmap {

std::string format_subset(const Subset& s, const Universe& u);
std::string format_relation(const BinRelation& rel, const Universe& u);
std::string format_partition(const Partition& p, const Universe& u);
std::string format_map(const SurjMap& f, const Universe& u, const Universe& v);
std::string format_witness(const Witness& w, const Instance& instance);
std::string format_verdict(const Verdict& v, const Instance& instance);

}  // namespace roughmap
