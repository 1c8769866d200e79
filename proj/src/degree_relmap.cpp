#include "roughmap/degree_relmap.hpp"

#include <bit>
#include <string>

#include "roughmap/error.hpp"

namespace roughmap {

namespace {

void require_domain(const SurjMap& f, std::size_t n, const char* what) {
  if (f.domain_size() != n)
    throw Error(Errc::MixedUniverse, std::string(what) + " lives in a universe of size " +
                                         std::to_string(n) + ", map domain has size " +
                                         std::to_string(f.domain_size()));
}

}  // namespace

DegreeRatio including_degree(const Subset& e, const Subset& f) {
  if (e.universe_size() != f.universe_size())
    throw Error(Errc::MixedUniverse, "including degree of subsets from different universes");
  if (e.is_empty()) throw Error(Errc::EmptyReference, "including degree D(F/E) needs E nonempty");
  return {static_cast<std::size_t>(std::popcount(e.mask() & f.mask())), e.cardinality()};
}

SurjMap SurjMap::make(std::size_t domain, std::size_t codomain,
                      std::span<const std::size_t> table) {
  // Validate sizes through Universe's rules.
  (void)make_universe(domain);
  (void)make_universe(codomain);
  if (table.size() != domain)
    throw Error(Errc::BadImage, "map table has " + std::to_string(table.size()) +
                                    " entries for a domain of size " + std::to_string(domain));
  SurjMap f;
  f.n_ = static_cast<std::uint8_t>(domain);
  f.m_ = static_cast<std::uint8_t>(codomain);
  for (Element x = 0; x < domain; ++x) {
    if (table[x] >= codomain)
      throw Error(Errc::BadImage, "image of element " + std::to_string(x) + " is " +
                                      std::to_string(table[x]) + ", outside codomain of size " +
                                      std::to_string(codomain));
    f.table_[x] = static_cast<std::uint8_t>(table[x]);
    f.fibers_[table[x]] |= bit(x);
    f.image_ |= bit(table[x]);
  }
  return f;
}

Subset SurjMap::fiber(Element v) const {
  if (v >= m_) throw Error(Errc::BadElement, "codomain element out of range");
  return Subset::from_mask(n_, fibers_[v]);
}

Subset SurjMap::fiber_of(Element x) const {
  if (x >= n_) throw Error(Errc::BadElement, "domain element out of range");
  return Subset::from_mask(n_, fiber_mask_of(x));
}

bool SurjMap::injective() const {
  return static_cast<std::size_t>(std::popcount(image_)) == n_;
}

SurjMap make_map(const Universe& domain, const Universe& codomain,
                 std::span<const std::size_t> table) {
  return SurjMap::make(domain.size(), codomain.size(), table);
}

std::vector<DegreeRatio> element_degrees(const SurjMap& f, const Partition& r) {
  require_domain(f, r.universe_size(), "partition");
  std::vector<DegreeRatio> out(f.domain_size());
  for (Element x = 0; x < f.domain_size(); ++x) {
    const Mask fiber = f.fiber_mask_of(x);
    out[x] = {static_cast<std::size_t>(std::popcount(fiber & r.block_mask_of(x))),
              static_cast<std::size_t>(std::popcount(fiber))};
  }
  return out;
}

BinRelation relmap(const SurjMap& f, const Partition& r) {
  require_domain(f, r.universe_size(), "partition");
  const std::size_t n = f.domain_size();
  std::array<DegreeRatio, kMaxElements> degree;
  for (Element x = 0; x < n; ++x) {
    const Mask fiber = f.fiber_mask_of(x);
    degree[x] = {static_cast<std::size_t>(std::popcount(fiber & r.block_mask_of(x))),
                 static_cast<std::size_t>(std::popcount(fiber))};
  }
  BinRelation out(f.codomain_size());
  for (Element x = 0; x < n; ++x)
    for (Mask m = r.block_mask_of(x); m != 0; m &= m - 1) {
      const auto y = static_cast<Element>(std::countr_zero(m));
      if (degree_eq(degree[x], degree[y])) out.add_unchecked(f.image(x), f.image(y));
    }
  return out;
}

BinRelation direct_image(const SurjMap& f, const BinRelation& rel) {
  require_domain(f, rel.universe_size(), "relation");
  BinRelation out(f.codomain_size());
  for (Element x = 0; x < f.domain_size(); ++x)
    for (Mask m = rel.row(x); m != 0; m &= m - 1)
      out.add_unchecked(f.image(x), f.image(static_cast<Element>(std::countr_zero(m))));
  return out;
}

Subset image_subset(const SurjMap& f, const Subset& x) {
  require_domain(f, x.universe_size(), "subset");
  Mask out = 0;
  for (Mask m = x.mask(); m != 0; m &= m - 1)
    out |= bit(f.image(static_cast<Element>(std::countr_zero(m))));
  return Subset::from_mask(f.codomain_size(), out);
}

bool fibers_within_blocks(const SurjMap& f, const Partition& r) {
  require_domain(f, r.universe_size(), "partition");
  for (Element x = 0; x < f.domain_size(); ++x)
    if (f.fiber_mask_of(x) & ~r.block_mask_of(x)) return false;
  return true;
}

}  // namespace roughmap
