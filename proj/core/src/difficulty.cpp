#include "ydc/difficulty.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "ydc/cache.hpp"
#include "ydc/errors.hpp"

namespace ydc {

int ValidSequence::cost() const {
    int c = 0;
    for (const Step& s : steps) c += (s.k == 1);
    return c;
}

Partition ValidSequence::target() const {
    return steps.empty() ? Partition{} : steps.back().partition;
}

int verify_sequence(const ValidSequence& seq, const std::optional<Partition>& target) {
    Partition prev;
    int cost = 0;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& s = seq.steps[i];
        int jump = s.partition.weight() - prev.weight();
        if (jump != s.k || (s.k != 1 && s.k != 2)) {
            std::ostringstream os;
            os << "step " << i << ": weight jump " << jump << " does not match k=" << s.k;
            throw VerificationError(VerificationError::Kind::WrongWeightJump,
                                    static_cast<int>(i), os.str());
        }
        if (displace(prev, s.lambda, Direction::Up) != s.partition ||
            displace(s.partition, s.lambda, Direction::Down) != prev) {
            std::ostringstream os;
            os << "step " << i << ": " << prev.str() << " and " << s.partition.str()
               << " are not linked by " << s.lambda.str();
            throw VerificationError(VerificationError::Kind::NotLinked,
                                    static_cast<int>(i), os.str());
        }
        cost += (s.k == 1);
        prev = s.partition;
    }
    if (target && prev != *target)
        throw VerificationError(VerificationError::Kind::WrongEndpoint, -1,
                                "sequence ends at " + prev.str() + ", expected " +
                                    target->str());
    return cost;
}

DifficultyResult DifficultyEngine::difficulty(const Partition& p) const {
    if (p.weight() > weight_limit_)
        throw ResourceError("partition weight exceeds the engine limit");

    auto t0 = std::chrono::steady_clock::now();

    struct Node {
        int cost;
        int pred;  // -1 for the empty partition
        Progression lambda;
        int k;
    };
    std::unordered_map<Partition, int, PartitionHash> index;
    std::vector<Partition> states;
    std::vector<Node> nodes;
    std::vector<std::vector<int>> layers(p.weight() + 1);

    auto intern = [&](const Partition& q) {
        auto [it, fresh] = index.try_emplace(q, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(q);
            nodes.push_back({-1, -1, Progression::empty(), 0});
            layers[q.weight()].push_back(it->second);
        }
        return it->second;
    };

    int root = intern(Partition{});
    nodes[root].cost = 0;

    // Every edge goes from weight w to w+1 or w+2, so a weight-ordered sweep
    // yields exact 0/1 distances without a priority queue.
    for (int w = 0; w <= p.weight(); ++w) {
        for (int id : layers[w]) {
            if (nodes[id].cost < 0) continue;  // never reached
            Partition q = states[id];
            int base = nodes[id].cost;
            for (LinkedStep& step : linked_successors(q, p)) {
                int cand = base + (step.witness.k == 1);
                int sid = intern(step.next);
                Node& node = nodes[sid];
                bool better = node.cost < 0 || cand < node.cost;
                // Deterministic certificates: among optimal predecessors keep
                // the lexicographically smallest one.
                bool tie = node.cost == cand &&
                           (node.pred < 0 || states[id] < states[node.pred]);
                if (better || tie) {
                    node.cost = cand;
                    node.pred = id;
                    node.lambda = step.witness.lambda;
                    node.k = step.witness.k;
                }
            }
        }
    }

    auto it = index.find(p);
    if (it == index.end() || nodes[it->second].cost < 0)
        throw ResourceError("target partition was not reached");  // unreachable

    DifficultyResult result;
    result.target = p;
    result.delta = nodes[it->second].cost;
    for (int id = it->second; nodes[id].pred >= 0 || id != root;) {
        const Node& node = nodes[id];
        result.certificate.steps.push_back({states[id], node.lambda, node.k});
        id = node.pred;
    }
    std::reverse(result.certificate.steps.begin(), result.certificate.steps.end());

    result.stats.explored = states.size();
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<std::vector<int>> difficulty_table(TableRange a_range, TableRange b_range,
                                               const DifficultyEngine& engine,
                                               DifficultyCache* cache,
                                               const TableProgress& progress) {
    if (a_range.lo < 1 || b_range.lo < 1 || a_range.hi < a_range.lo ||
        b_range.hi < b_range.lo)
        throw DomainError("bad table range");

    std::vector<std::vector<int>> table(a_range.hi - a_range.lo + 1,
                                        std::vector<int>(b_range.hi - b_range.lo + 1));
    for (int a = a_range.lo; a <= a_range.hi; ++a) {
        for (int b = b_range.lo; b <= b_range.hi; ++b) {
            Partition box = Partition::from_sorted(std::vector<int>(b, a));
            int delta;
            if (auto hit = cache ? cache->lookup(box) : std::nullopt) {
                delta = hit->delta;
            } else {
                DifficultyResult res = engine.difficulty(box);
                delta = res.delta;
                if (cache) cache->put(box, res.delta, res.certificate);
            }
            table[a - a_range.lo][b - b_range.lo] = delta;
            if (progress) progress(a, b, delta);
        }
    }
    if (cache) {
        try {
            cache->save();
        } catch (const IoError& e) {
            std::cerr << "warning: " << e.what() << " (results kept in memory)\n";
        }
    }
    return table;
}

}  // namespace ydc
