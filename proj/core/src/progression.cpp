#include "ydc/progression.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ydc/errors.hpp"

namespace ydc {

Progression Progression::residue(int rep, int modulus) {
    if (modulus == 1)
        throw WouldBeAllIntegers("the class mod 1 is all of Z");
    if (modulus < 1) throw DomainError("modulus must be >= 2");
    Progression p;
    p.kind_ = Kind::Residue;
    p.modulus_ = modulus;
    p.rep_ = mod(rep, modulus);
    return p;
}

Progression Progression::generated_by(int x, int y) {
    if (x == y) return singleton(x);
    int d = std::abs(x - y);
    if (d == 1)
        throw WouldBeAllIntegers("progression generated by adjacent integers is all of Z");
    return residue(x, d);
}

Progression Progression::negated() const {
    switch (kind_) {
        case Kind::Empty: return *this;
        case Kind::Singleton: return singleton(-rep_);
        case Kind::Residue: return residue(-rep_, modulus_);
    }
    return *this;
}

Progression Progression::shifted(int t) const {
    switch (kind_) {
        case Kind::Empty: return *this;
        case Kind::Singleton: return singleton(rep_ + t);
        case Kind::Residue: return residue(rep_ + t, modulus_);
    }
    return *this;
}

Progression Progression::reflected(int c) const {
    switch (kind_) {
        case Kind::Empty: return *this;
        case Kind::Singleton: return singleton(c - rep_);
        case Kind::Residue: return residue(c - rep_, modulus_);
    }
    return *this;
}

std::string Progression::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Empty: return "empty";
        case Kind::Singleton: os << '{' << rep_ << '}'; break;
        case Kind::Residue: os << rep_ << " mod " << modulus_; break;
    }
    return os.str();
}

namespace {

int parse_int(std::string_view tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw DomainError("bad integer '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Progression Progression::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "empty") return empty();
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
        return singleton(parse_int(text.substr(1, text.size() - 2)));
    auto pos = text.find(" mod ");
    if (pos == std::string_view::npos)
        throw DomainError("bad progression '" + std::string(text) +
                          "' (expected \"empty\", \"{m}\", or \"m mod d\")");
    int rep = parse_int(text.substr(0, pos));
    int modulus = parse_int(text.substr(pos + 5));
    return residue(rep, modulus);
}

std::vector<TracedProgression> relevant_progressions(std::span<const int> window) {
    if (window.empty()) throw DomainError("window must be nonempty");
    if (window.size() > 256) throw DomainError("window too large (max 256)");

    std::vector<int> pts(window.begin(), window.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto trace_of = [&](const Progression& p) {
        std::vector<int> t;
        for (int n : pts)
            if (p.contains(n)) t.push_back(n);
        return t;
    };

    // rank: smaller wins; singletons rank behind every residue class.
    struct Entry {
        Progression rep;
        long long rank;
    };
    std::map<std::vector<int>, Entry> by_trace;
    auto offer = [&](const Progression& p, long long rank) {
        auto t = trace_of(p);
        if (t.empty()) return;  // the empty trace belongs to Empty alone
        auto it = by_trace.find(t);
        if (it == by_trace.end() || rank < it->second.rank)
            by_trace[std::move(t)] = {p, rank};
    };

    for (int n : pts) offer(Progression::singleton(n), (1ll << 40) + n);
    int range = pts.back() - pts.front();
    for (int d = 2; d <= range; ++d)
        for (int rep = 0; rep < d; ++rep)
            offer(Progression::residue(rep, d), (static_cast<long long>(d) << 16) + rep);

    std::vector<TracedProgression> out;
    out.push_back({Progression::empty(), {}});
    for (auto& [trace, entry] : by_trace)
        out.push_back({entry.rep, trace});
    return out;
}

}  // namespace ydc
