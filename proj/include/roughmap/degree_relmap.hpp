#pragma once

// Including degrees and the degree-filtered relation mapping.
//
// For a map f : U -> V and an equivalence R on U, the mapped relation keeps
// (f(x), f(y)) for every (x, y) in R whose including degrees
// D([x]_R / [x]_f) and D([y]_R / [y]_f) agree, where D(F/E) = |E & F| / |E|.
// Degrees stay as unreduced integer pairs and are compared by
// cross-multiplication; nothing here touches floating point.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "roughmap/finite_structures.hpp"

namespace roughmap {

struct DegreeRatio {
  std::size_t num = 0;  // |E & F|
  std::size_t den = 1;  // |E|, never zero
};

// Exact rational equality: num1 * den2 == num2 * den1.
constexpr bool degree_eq(DegreeRatio a, DegreeRatio b) { return a.num * b.den == b.num * a.den; }
constexpr bool operator==(DegreeRatio a, DegreeRatio b) { return degree_eq(a, b); }

// D(F/E). Throws EmptyReference when E is empty, MixedUniverse on a size mismatch.
DegreeRatio including_degree(const Subset& e, const Subset& f);

// A total map f : U -> V with its fibers precomputed. Construction does not
// require surjectivity; surjective() records it.
class SurjMap {
 public:
  // Throws BadImage for an entry outside 0..codomain-1 or a table whose length
  // differs from domain.
  static SurjMap make(std::size_t domain, std::size_t codomain, std::span<const std::size_t> table);

  std::size_t domain_size() const { return n_; }
  std::size_t codomain_size() const { return m_; }
  Element image(Element x) const { return table_[x]; }
  std::span<const std::uint8_t> table() const { return {table_.data(), n_}; }

  Mask fiber_mask(Element v) const { return fibers_[v]; }
  Mask fiber_mask_of(Element x) const { return fibers_[table_[x]]; }
  Subset fiber(Element v) const;
  // [x]_f = {y | f(y) = f(x)}
  Subset fiber_of(Element x) const;
  Mask image_mask() const { return image_; }

  bool surjective() const { return image_ == full_mask(m_); }
  bool injective() const;
  bool bijective() const { return n_ == m_ && surjective(); }

  bool operator==(const SurjMap&) const = default;

 private:
  SurjMap() = default;

  std::uint8_t n_ = 0;
  std::uint8_t m_ = 0;
  Mask image_ = 0;
  std::array<std::uint8_t, kMaxElements> table_{};
  std::array<Mask, kMaxElements> fibers_{};
};

SurjMap make_map(const Universe& domain, const Universe& codomain,
                 std::span<const std::size_t> table);

// D([x]_R / [x]_f) for every x of the domain.
std::vector<DegreeRatio> element_degrees(const SurjMap& f, const Partition& r);

// The mapped relation f(R) on the codomain. Throws MixedUniverse when R is
// not over f's domain.
BinRelation relmap(const SurjMap& f, const Partition& r);

// {(f(x), f(y)) | (x, y) in rel}: the plain image with no degree filter.
BinRelation direct_image(const SurjMap& f, const BinRelation& rel);

// {f(x) | x in X}
Subset image_subset(const SurjMap& f, const Subset& x);

// [x]_f is contained in [x]_R for every x.
bool fibers_within_blocks(const SurjMap& f, const Partition& r);

}  // namespace roughmap
