#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ydc/displacement.hpp"
#include "ydc/partition.hpp"
#include "ydc/progression.hpp"

namespace ydc {

class DifficultyCache;

/// One step of a valid sequence: the partition reached, the progression
/// witnessing the link from the previous partition, and the weight jump k.
struct Step {
    Partition partition;
    Progression lambda;
    int k = 0;
};

/// A chain of partitions from the empty partition in which every adjacent
/// pair is 1- or 2-linked. Witnesses delta(P): cost = number of 1-linked
/// steps.
struct ValidSequence {
    std::vector<Step> steps;

    int cost() const;
    Partition target() const;  // empty partition for the empty sequence
};

struct SearchStats {
    std::size_t explored = 0;
    double seconds = 0.0;
};

struct DifficultyResult {
    Partition target;
    int delta = 0;
    ValidSequence certificate;
    SearchStats stats;
};

/// Re-checks every step of `seq` with both displacement directions and the
/// weight increments; returns the number of 1-linked steps. Throws
/// VerificationError on the first bad step, and WrongEndpoint if `target` is
/// given and the sequence ends elsewhere.
int verify_sequence(const ValidSequence& seq, const std::optional<Partition>& target);

/// Exact difficulty via a layered dynamic program over the sub-partitions of
/// the target, with 0/1 edge weights (k = 2 steps are free).
class DifficultyEngine {
public:
    explicit DifficultyEngine(int weight_limit = 200) : weight_limit_(weight_limit) {}

    /// Throws ResourceError when |p| exceeds the weight limit.
    DifficultyResult difficulty(const Partition& p) const;

    int weight_limit() const { return weight_limit_; }

private:
    int weight_limit_;
};

/// Independent exhaustive check: minimum cost over all valid sequences from
/// the empty partition, found by depth-first path enumeration with linkage
/// decided by trace enumeration over relevant_progressions (no divisor
/// scan). Requires |p| <= 12 (ResourceError otherwise).
int difficulty_oracle(const Partition& p);

/// Per-cell callback: (a, b, delta).
using TableProgress = std::function<void(int, int, int)>;

struct TableRange {
    int lo = 0;
    int hi = 0;
};

/// Matrix of delta((a^b)) for a in a_range, b in b_range; entry [a - a.lo]
/// [b - b.lo]. Results are read from and written to the cache when one is
/// given; cache I/O failures do not abort the computation.
std::vector<std::vector<int>> difficulty_table(TableRange a_range, TableRange b_range,
                                               const DifficultyEngine& engine,
                                               DifficultyCache* cache = nullptr,
                                               const TableProgress& progress = {});

}  // namespace ydc
