#pragma once

#include "ydc/difficulty.hpp"
#include "ydc/partition.hpp"

namespace ydc {

/// Constructive optimal sequence for partitions satisfying
///   P_0 - P*_0 >= 2 P_1 - 2   and   |P| <= 2 P_0 - 2,
/// with cost exactly 2 P_0 - |P| (PreconditionError otherwise). The output
/// is re-verified before being returned.
ValidSequence primitive_construction(const Partition& p);

/// Constructive sequence for the box partition (a^b), a, b >= 2, with cost
/// at most a + 3b - 5 (and at most a + 2b - 4 for even a). Every step is
/// re-checked; a failed two-box step is repaired by two one-box steps.
ValidSequence box_construction(int a, int b);

}  // namespace ydc
