#include "ydc/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ydc/errors.hpp"

namespace ydc {

Partition Partition::normalized(std::vector<int> values) {
    for (int v : values)
        if (v < 0) throw DomainError("partition parts must be nonnegative");
    std::sort(values.begin(), values.end(), std::greater<>());
    while (!values.empty() && values.back() == 0) values.pop_back();
    Partition p;
    p.parts_ = std::move(values);
    return p;
}

Partition Partition::from_sorted(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        assert(parts[i] > 0);
        assert(i == 0 || parts[i - 1] >= parts[i]);
    }
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
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

}  // namespace

Partition Partition::parse(std::string_view text) {
    if (text.empty()) throw DomainError("empty partition text");
    if (text == "0") return Partition{};
    return normalized(parse_int_list(text, ','));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    Partition out;
    if (parts_.empty()) return out;
    out.parts_.resize(parts_[0]);
    for (int n = 0; n < parts_[0]; ++n) {
        int count = 0;
        for (int v : parts_)
            if (v > n) ++count;
            else break;
        out.parts_[n] = count;
    }
    return out;
}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int i = 0; i < other.rows(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::with_box_added(int row) const {
    assert(row >= 0 && row <= rows());
    Partition out = *this;
    if (row == rows())
        out.parts_.push_back(1);
    else
        ++out.parts_[row];
    assert(row == 0 || out.parts_[row - 1] >= out.parts_[row]);
    return out;
}

CornerSet corners(const Partition& p) {
    CornerSet cs;
    int n = p.rows();
    for (int i = 0; i <= n; ++i) {
        // P_{-1} = infinity: row 0 is always addable, as is the first
        // all-zero row below the diagram.
        bool above_larger = (i == 0) || p.part(i - 1) > p.part(i);
        if (above_larger && i <= n) cs.addable.push_back({i, p.part(i) - i});
    }
    for (int i = 0; i < n; ++i) {
        if (p.part(i + 1) < p.part(i))
            cs.removable.push_back({i, p.part(i) - i - 1});
    }
    return cs;
}

VanishingSequence::VanishingSequence(std::vector<int> entries) {
    if (entries.empty()) throw DomainError("vanishing sequence must be nonempty");
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] <= entries[i - 1])
            throw DomainError("vanishing sequence must be strictly increasing");
    entries_ = std::move(entries);
}

VanishingSequence VanishingSequence::parse(std::string_view text) {
    VanishingSequence a(parse_int_list(text, ','));
    if (!a.nonnegative()) throw DomainError("vanishing sequence entries must be nonnegative");
    return a;
}

std::string VanishingSequence::str() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    return os.str();
}

VanishingSequence to_vanishing(const Partition& p, int r) {
    if (r + 1 < p.rows())
        throw DomainError("index bound r too small for partition");
    std::vector<int> a(r + 1);
    for (int i = 0; i <= r; ++i) a[i] = i + p.part(r - i);
    return VanishingSequence(std::move(a));
}

std::pair<Partition, int> from_vanishing(const VanishingSequence& a) {
    if (!a.nonnegative())
        throw DomainError("vanishing sequence entries must be nonnegative");
    int r = a.size() - 1;
    std::vector<int> parts(r + 1);
    for (int i = 0; i <= r; ++i) parts[r - i] = a[i] - i;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return {Partition::from_sorted(std::move(parts)), r};
}

}  // namespace ydc
