#pragma once

#include "roughmap/finite_structures.hpp"

namespace roughmap {

// Union of the blocks of p contained in x.
Subset lower_approx(const Partition& p, const Subset& x);
// Union of the blocks of p that meet x.
Subset upper_approx(const Partition& p, const Subset& x);
// x is a union of blocks (lower = upper = x).
bool is_definable(const Partition& p, const Subset& x);

}  // namespace roughmap
