#include "roughmap/rough_approx.hpp"

#include <string>

#include "roughmap/error.hpp"

namespace roughmap {

namespace {

void check_same(const Partition& p, const Subset& x) {
  if (p.universe_size() != x.universe_size())
    throw Error(Errc::MixedUniverse, "partition over size " + std::to_string(p.universe_size()) +
                                         " applied to subset over size " +
                                         std::to_string(x.universe_size()));
}

}  // namespace

Subset lower_approx(const Partition& p, const Subset& x) {
  check_same(p, x);
  Mask out = 0;
  for (std::size_t b = 0; b < p.block_count(); ++b)
    if ((p.block_mask(b) & ~x.mask()) == 0) out |= p.block_mask(b);
  return Subset::from_mask(p.universe_size(), out);
}

Subset upper_approx(const Partition& p, const Subset& x) {
  check_same(p, x);
  Mask out = 0;
  for (std::size_t b = 0; b < p.block_count(); ++b)
    if (p.block_mask(b) & x.mask()) out |= p.block_mask(b);
  return Subset::from_mask(p.universe_size(), out);
}

bool is_definable(const Partition& p, const Subset& x) {
  return lower_approx(p, x) == x && upper_approx(p, x) == x;
}

}  // namespace roughmap
