#include "ydc/displacement.hpp"

#include <algorithm>
#include <cassert>

#include "ydc/errors.hpp"

namespace ydc {

Partition displace(const Partition& p, const Progression& lambda, Direction dir) {
    int n = p.rows();
    std::vector<int> out;
    if (dir == Direction::Up) {
        out.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            int cur = p.part(i);
            bool addable = (i == 0 || p.part(i - 1) > cur);
            out[i] = cur + ((addable && lambda.contains(cur - i)) ? 1 : 0);
        }
    } else {
        out.resize(n);
        for (int i = 0; i < n; ++i) {
            int cur = p.part(i);
            bool removable = p.part(i + 1) < cur;
            out[i] = cur - ((removable && lambda.contains(cur - i - 1)) ? 1 : 0);
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Partition::from_sorted(std::move(out));
}

VanishingSequence seq_displace(const VanishingSequence& a, const Progression& lambda,
                               Direction dir) {
    int r = a.size() - 1;
    std::vector<int> out(a.entries());
    if (dir == Direction::Up) {
        for (int i = 0; i <= r; ++i) {
            bool room = (i == r) || a[i + 1] > a[i] + 1;
            if (room && lambda.contains(a[i] + 1)) ++out[i];
        }
    } else {
        for (int i = 0; i <= r; ++i) {
            // Vanishing orders stay nonnegative: the bottom entry never
            // drops below zero (row r + 1 of the diagram has no box to
            // remove).
            bool room = (i == 0) ? a[0] >= 1 : a[i - 1] < a[i] - 1;
            if (room && lambda.contains(a[i])) --out[i];
        }
    }
    return VanishingSequence(std::move(out));
}

namespace {

// Rows at which q_next has exactly one more box than q; empty result means
// the pair is not a componentwise one-or-two box extension.
std::optional<std::vector<int>> added_rows(const Partition& q, const Partition& q_next) {
    if (q_next.rows() < q.rows() || q_next.rows() > q.rows() + 1) return std::nullopt;
    std::vector<int> rows;
    for (int i = 0; i < q_next.rows(); ++i) {
        int d = q_next.part(i) - q.part(i);
        if (d < 0 || d > 1) return std::nullopt;
        if (d == 1) rows.push_back(i);
    }
    return rows;
}

}  // namespace

std::optional<LinkWitness> linkage(const Partition& q, const Partition& q_next) {
    int k = q_next.weight() - q.weight();
    if (k != 1 && k != 2) return std::nullopt;
    auto rows = added_rows(q, q_next);
    if (!rows || static_cast<int>(rows->size()) != k) return std::nullopt;

    if (k == 1) {
        int i = (*rows)[0];
        Progression lambda = Progression::singleton(q.part(i) - i);
        if (displace(q, lambda, Direction::Up) == q_next &&
            displace(q_next, lambda, Direction::Down) == q)
            return LinkWitness{1, lambda, *rows};
        return std::nullopt;
    }

    int i1 = (*rows)[0], i2 = (*rows)[1];
    int v1 = q.part(i1) - i1, v2 = q.part(i2) - i2;
    int gap = v1 - v2;
    assert(gap > 0);
    for (int d = 2; d <= gap; ++d) {
        if (gap % d != 0) continue;
        Progression lambda = Progression::residue(v1, d);
        if (displace(q, lambda, Direction::Up) == q_next &&
            displace(q_next, lambda, Direction::Down) == q)
            return LinkWitness{2, lambda, *rows};
    }
    return std::nullopt;
}

std::vector<LinkedStep> linked_successors(const Partition& q, const Partition& container) {
    if (!container.contains(q))
        throw DomainError("partition does not fit inside the container");

    auto cs = corners(q);
    std::vector<Corner> fitting;
    for (const Corner& c : cs.addable)
        if (q.part(c.row) + 1 <= container.part(c.row)) fitting.push_back(c);

    std::vector<LinkedStep> out;
    for (const Corner& c : fitting)
        out.push_back({q.with_box_added(c.row),
                       LinkWitness{1, Progression::singleton(c.diagonal), {c.row}}});

    for (std::size_t x = 0; x < fitting.size(); ++x) {
        for (std::size_t y = x + 1; y < fitting.size(); ++y) {
            int v1 = fitting[x].diagonal, v2 = fitting[y].diagonal;
            int gap = v1 - v2;
            for (int d = 2; d <= gap; ++d) {
                if (gap % d != 0) continue;
                Progression lambda = Progression::residue(v1, d);
                Partition up = displace(q, lambda, Direction::Up);
                if (up.weight() != q.weight() + 2) continue;
                if (!container.contains(up)) continue;
                if (displace(up, lambda, Direction::Down) != q) continue;
                out.push_back({std::move(up),
                               LinkWitness{2, lambda, {fitting[x].row, fitting[y].row}}});
                break;  // smaller moduli take precedence; one witness per pair
            }
        }
    }

    std::sort(out.begin(), out.end(),
              [](const LinkedStep& a, const LinkedStep& b) { return a.next < b.next; });
    return out;
}

}  // namespace ydc
