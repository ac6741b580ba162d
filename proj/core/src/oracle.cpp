#include <algorithm>
#include <set>

#include "ydc/difficulty.hpp"
#include "ydc/errors.hpp"

namespace ydc {

namespace {

// Search state shared across the recursion.
struct OracleSearch {
    Partition target;
    int target_weight;
    int target_top;   // P_0
    int target_rows;  // P*_0
    int best;

    // Sound lower bound on the remaining cost: parity of the remaining
    // weight, and the fact that P_0 (resp. the row count) grows by at most
    // one per step while each free step adds weight two.
    int lower_bound(const Partition& q) const {
        int rem = target_weight - q.weight();
        int lb = std::max({rem % 2, 2 * (target_top - q.part(0)) - rem,
                           2 * (target_rows - q.rows()) - rem});
        if ((lb - rem) % 2 != 0) ++lb;
        return lb;
    }

    void dfs(const Partition& q, int cost) {
        if (q == target) {
            best = std::min(best, cost);
            return;
        }
        if (cost + lower_bound(q) >= best) return;

        // Linkage by definition: enumerate one progression per distinct
        // trace on the corner diagonals and apply the displacement rules
        // directly.
        auto cs = corners(q);
        std::vector<int> window;
        for (const Corner& c : cs.addable) window.push_back(c.diagonal);
        for (const Corner& c : cs.removable) window.push_back(c.diagonal);

        std::set<Partition> seen;
        for (const TracedProgression& tp : relevant_progressions(window)) {
            Partition next = displace(q, tp.rep, Direction::Up);
            int k = next.weight() - q.weight();
            if (k != 1 && k != 2) continue;
            if (!target.contains(next)) continue;
            if (displace(next, tp.rep, Direction::Down) != q) continue;
            if (!seen.insert(next).second) continue;
            dfs(next, cost + (k == 1));
        }
    }
};

}  // namespace

int difficulty_oracle(const Partition& p) {
    if (p.weight() > 12)
        throw ResourceError("oracle is exhaustive and limited to weight 12");
    // Singleton chains give a valid sequence of cost |p|, so start there.
    OracleSearch search{p, p.weight(), p.part(0), p.rows(), p.weight()};
    if (p.empty()) return 0;
    search.dfs(Partition{}, 0);
    return search.best;
}

}  // namespace ydc
