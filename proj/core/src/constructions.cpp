#include "ydc/constructions.hpp"

#include <algorithm>
#include <deque>

#include "ydc/errors.hpp"

namespace ydc {

namespace {

// One-box step q -> q plus a box at `row`, witnessed by the singleton at the
// box's diagonal.
Step single_step(const Partition& q, int row) {
    return {q.with_box_added(row), Progression::singleton(q.part(row) - row), 1};
}

void check(const ValidSequence& seq, const Partition& target, const char* who) {
    try {
        verify_sequence(seq, target);
    } catch (const VerificationError& e) {
        throw ConstructionBug(std::string(who) + " emitted a bad sequence: " + e.what());
    }
}

}  // namespace

ValidSequence primitive_construction(const Partition& p) {
    int top = p.part(0);
    int dual_top = p.rows();
    if (top - dual_top < 2 * p.part(1) - 2)
        throw PreconditionError("P_0 - P*_0 >= 2 P_1 - 2 fails");
    if (p.weight() > 2 * top - 2)
        throw PreconditionError("|P| <= 2 P_0 - 2 fails");

    // Walk down: repeatedly turn in the corners at the ends of rows 0 and k,
    // where k is the last row equal to P_1; record the steps in reverse.
    std::deque<Step> steps;
    Partition cur = p;
    while (cur.part(1) > 0) {
        int k = 1;
        while (cur.part(k + 1) == cur.part(1)) ++k;
        Progression lambda =
            Progression::generated_by(cur.part(0) - 1, cur.part(k) - k - 1);
        Partition next = displace(cur, lambda, Direction::Down);
        if (next.weight() != cur.weight() - 2)
            throw ConstructionBug("two-corner displacement removed " +
                                  std::to_string(cur.weight() - next.weight()) +
                                  " boxes at " + cur.str());
        steps.push_front({cur, lambda, 2});
        cur = next;
    }
    // Base case: a single row, reached by singleton steps from the empty
    // partition.
    for (int j = cur.part(0); j >= 1; --j) {
        steps.push_front(
            {Partition::from_sorted({j}), Progression::singleton(j - 1), 1});
    }

    ValidSequence seq{std::vector<Step>(steps.begin(), steps.end())};
    check(seq, p, "primitive_construction");
    if (seq.cost() != 2 * top - p.weight())
        throw ConstructionBug("primitive_construction cost is not 2 P_0 - |P|");
    return seq;
}

namespace {

// (a^k, i + a/2, i) for even a, zero rows stripped and equal rows merged.
Partition box_intermediate(int a, int k, int i) {
    std::vector<int> parts(static_cast<std::size_t>(k), a);
    int h = a / 2;
    if (i + h > 0) parts.push_back(i + h);
    if (i > 0) parts.push_back(i);
    return Partition::normalized(std::move(parts));
}

ValidSequence box_construction_even(int a, int b) {
    int h = a / 2;
    ValidSequence seq;

    Partition cur;
    for (int j = 0; j < h; ++j) {
        seq.steps.push_back(single_step(cur, 0));
        cur = seq.steps.back().partition;
    }

    for (int k = 0; k <= b - 2; ++k) {
        for (int i = 1; i <= h; ++i) {
            Partition next = box_intermediate(a, k, i);
            Progression lambda = Progression::residue(i - k - 2, h + 1);
            if (displace(cur, lambda, Direction::Up) == next &&
                displace(next, lambda, Direction::Down) == cur) {
                seq.steps.push_back({next, lambda, 2});
            } else {
                // The progression also meets the corner at the end of the
                // first row; replace the step by two one-box steps, lower
                // box (row k+1) first.
                seq.steps.push_back(single_step(cur, k + 1));
                seq.steps.push_back(single_step(seq.steps.back().partition, k));
            }
            cur = next;
        }
    }

    // cur is now (a^{b-1}, a/2); fill out the last row one box at a time.
    while (cur.part(b - 1) < a) {
        seq.steps.push_back(single_step(cur, b - 1));
        cur = seq.steps.back().partition;
    }
    return seq;
}

}  // namespace

ValidSequence box_construction(int a, int b) {
    if (a < 2 || b < 2) throw PreconditionError("box construction needs a, b >= 2");

    ValidSequence seq;
    if (a % 2 == 0) {
        seq = box_construction_even(a, b);
    } else {
        seq = box_construction_even(a - 1, b);
        // Append the missing column, top row first.
        Partition cur = seq.target();
        for (int row = 0; row < b; ++row) {
            seq.steps.push_back(single_step(cur, row));
            cur = seq.steps.back().partition;
        }
    }

    Partition box = Partition::from_sorted(std::vector<int>(b, a));
    check(seq, box, "box_construction");
    int bound = (a % 2 == 0) ? a + 2 * b - 4 : a + 3 * b - 5;
    if (seq.cost() > bound)
        throw ConstructionBug("box_construction exceeded its cost bound");
    return seq;
}

}  // namespace ydc
