#pragma once

#include <optional>
#include <vector>

#include "ydc/partition.hpp"
#include "ydc/progression.hpp"

namespace ydc {

enum class Direction { Up, Down };

/// Simultaneous corner displacement of a Young diagram: every addable corner
/// whose diagonal P_i - i lies in lambda is turned out (Up), every removable
/// corner whose diagonal P_i - i - 1 lies in lambda is turned in (Down).
/// Includes creating or removing a bottom row.
Partition displace(const Partition& p, const Progression& lambda, Direction dir);

/// Entrywise displacement of a strictly increasing sequence:
///   up:   a_i -> a_i + 1 if a_i + 1 in lambda and a_{i+1} > a_i + 1,
///   down: a_i -> a_i - 1 if a_i in lambda and a_{i-1} < a_i - 1,
/// with a_{r+1} = +inf. Entries are vanishing orders and never go below
/// zero: the bottom entry only moves down when it is positive. (This is
/// exactly the rule induced on a_i = i + P_{r-i} by displacing P.)
VanishingSequence seq_displace(const VanishingSequence& a, const Progression& lambda,
                               Direction dir);

/// Witness that q' is the upward displacement of q and q the downward
/// displacement of q' under `lambda`, with k = |q'| - |q| added boxes.
struct LinkWitness {
    int k = 0;
    Progression lambda;
    std::vector<int> added_rows;
};

/// Canonical witness for a linked pair, or nullopt. Only weight gaps 1 and 2
/// are considered. Tie-break: singleton for k = 1; smallest modulus for
/// k = 2.
std::optional<LinkWitness> linkage(const Partition& q, const Partition& q_next);

struct LinkedStep {
    Partition next;
    LinkWitness witness;
};

/// All 1- and 2-linked successors of q that stay inside `container`,
/// sorted by successor partition. Requires q inside container.
std::vector<LinkedStep> linked_successors(const Partition& q, const Partition& container);

}  // namespace ydc
