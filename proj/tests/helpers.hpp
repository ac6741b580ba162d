#pragma once

#include <random>
#include <vector>

#include "ydc/partition.hpp"

namespace ydc::testing {

// All partitions of weight exactly n, first parts at most `cap`.
inline void partitions_of(int n, int cap, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition::from_sorted(acc));
        return;
    }
    for (int first = std::min(n, cap); first >= 1; --first) {
        acc.push_back(first);
        partitions_of(n - first, first, acc, out);
        acc.pop_back();
    }
}

// All partitions with weight <= max_weight (the empty one included).
inline std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    std::vector<int> acc;
    for (int n = 0; n <= max_weight; ++n) partitions_of(n, n, acc, out);
    return out;
}

// Uniformly sloppy random partition: random parts, then normalize.
inline Partition random_partition(std::mt19937& rng, int max_part, int max_rows) {
    std::uniform_int_distribution<int> nrows(0, max_rows);
    std::uniform_int_distribution<int> part(1, max_part);
    std::vector<int> parts;
    int rows = nrows(rng);
    for (int i = 0; i < rows; ++i) parts.push_back(part(rng));
    return Partition::normalized(std::move(parts));
}

}  // namespace ydc::testing
