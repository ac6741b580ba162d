#include "ydc/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ydc/errors.hpp"

namespace ydc {

namespace {

std::vector<int> parse_csv_ints(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string_view tok =
            text.substr(pos, next == std::string_view::npos ? next : next - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw DomainError("bad integer '" + std::string(tok) + "'");
        out.push_back(value);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

// The complement of `gaps` (sorted, positive) fails closure iff some gap is
// the sum of two nonzero non-gaps.
bool gapset_is_closed(const std::vector<int>& gaps) {
    if (gaps.empty()) return true;
    int top = gaps.back();
    std::vector<bool> is_gap(top + 1, false);
    for (int f : gaps) is_gap[f] = true;
    for (int f : gaps)
        for (int s = 1; 2 * s <= f; ++s)
            if (!is_gap[s] && !is_gap[f - s]) return false;
    return true;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (!gaps.empty() && gaps.front() <= 0)
        throw DomainError("gaps must be positive (0 is always in the semigroup)");
    if (!gapset_is_closed(gaps))
        throw DomainError("NotASemigroup: complement of the gap set is not closed "
                          "under addition");
    NumericalSemigroup s;
    s.gaps_ = std::move(gaps);
    return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& generators) {
    int g = 0;
    for (int v : generators) {
        if (v <= 0) throw DomainError("generators must be positive");
        g = std::gcd(g, v);
    }
    if (g != 1)
        throw DomainError("InfiniteGaps: generators have gcd > 1");

    int lo = *std::min_element(generators.begin(), generators.end());
    int hi = *std::max_element(generators.begin(), generators.end());
    // The Frobenius number is below lo * hi.
    int bound = lo * hi + 1;
    std::vector<bool> in(bound, false);
    in[0] = true;
    for (int n = 1; n < bound; ++n)
        for (int v : generators)
            if (n >= v && in[n - v]) {
                in[n] = true;
                break;
            }
    std::vector<int> gaps;
    for (int n = 1; n < bound; ++n)
        if (!in[n]) gaps.push_back(n);
    NumericalSemigroup s;
    s.gaps_ = std::move(gaps);
    return s;
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
    if (text.rfind("gaps:", 0) == 0) {
        std::string_view rest = text.substr(5);
        if (rest.empty() || rest == "none") return from_gaps({});
        return from_gaps(parse_csv_ints(rest));
    }
    if (text.rfind("gens:", 0) == 0)
        return from_generators(parse_csv_ints(text.substr(5)));
    throw DomainError("semigroup spec must start with 'gaps:' or 'gens:'");
}

std::string NumericalSemigroup::str() const {
    std::ostringstream os;
    os << "gaps:";
    if (gaps_.empty()) os << "none";
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        if (i) os << ',';
        os << gaps_[i];
    }
    return os.str();
}

bool NumericalSemigroup::contains(int n) const {
    if (n < 0) return false;
    return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

int NumericalSemigroup::element(int n) const {
    // s_n = n plus the number of gaps skipped before it; scan directly.
    int value = 0;
    for (int seen = 0;; ++value) {
        if (contains(value)) {
            if (seen == n) return value;
            ++seen;
        }
    }
}

long long NumericalSemigroup::weight() const {
    long long sum = std::accumulate(gaps_.begin(), gaps_.end(), 0ll);
    long long g = genus();
    return sum - g * (g + 1) / 2;
}

bool NumericalSemigroup::primitive() const {
    if (gaps_.empty()) return true;
    return 2 * element(1) > gaps_.back();
}

Partition NumericalSemigroup::to_partition() const {
    int g = genus();
    std::vector<int> parts;
    for (int n = 0;; ++n) {
        int part = g + n - element(n);
        if (part <= 0) break;
        parts.push_back(part);
    }
    return Partition::from_sorted(std::move(parts));
}

std::optional<ImprimitivityWitness> imprimitivity_witness(const NumericalSemigroup& s) {
    if (s.primitive()) return std::nullopt;
    int s1 = s.element(1);
    int f = 2 * s1 + 1;
    while (s.contains(f)) ++f;
    ImprimitivityWitness w{f, f - 2 * s1};
    // Re-verify the violation in the shifted semigroup S^k = {0, s_1+k, ...}:
    // membership of n > 0 in S^k means n - k is a positive element of S.
    auto shifted_contains = [&](int n) {
        return n == 0 || (n - w.k > 0 && s.contains(n - w.k));
    };
    if (!shifted_contains(s1 + w.k) || shifted_contains(2 * (s1 + w.k)))
        throw ConstructionBug("imprimitivity witness failed its own check");
    return w;
}

std::vector<NumericalSemigroup> enumerate_semigroups(int genus) {
    if (genus < 0) throw DomainError("genus must be nonnegative");
    if (genus > 12) throw ResourceError("semigroup enumeration limited to genus 12");
    std::vector<NumericalSemigroup> out;
    if (genus == 0) {
        out.emplace_back();
        return out;
    }

    // All size-g subsets of [1, 2g-1], in lexicographic order, filtered by
    // closure of the complement.
    std::vector<int> pick(genus);
    std::iota(pick.begin(), pick.end(), 1);
    const int top = 2 * genus - 1;
    while (true) {
        if (gapset_is_closed(pick)) {
            out.push_back(NumericalSemigroup::from_gaps(pick));
        }
        int i = genus - 1;
        while (i >= 0 && pick[i] == top - (genus - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < genus; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

CofiniteSequence partition_to_sequence(const Partition& p, int g) {
    if (g < p.part(0))
        throw DomainError("genus must be at least P_0 (s_0 would be negative)");
    CofiniteSequence seq;
    int m = p.rows();
    for (int n = 0; n < m; ++n) seq.prefix.push_back(g + n - p.part(n));
    seq.threshold = g + m;

    bool closed = true;
    if (seq.prefix.empty() || seq.prefix.front() != 0) {
        closed = false;
    } else {
        auto member = [&](int n) {
            return n >= seq.threshold ||
                   std::binary_search(seq.prefix.begin(), seq.prefix.end(), n);
        };
        for (std::size_t i = 0; i < seq.prefix.size() && closed; ++i)
            for (std::size_t j = i; j < seq.prefix.size() && closed; ++j)
                if (!member(seq.prefix[i] + seq.prefix[j])) closed = false;
    }
    seq.is_semigroup = closed;
    return seq;
}

}  // namespace ydc
