#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ydc {

/// An integer partition P_0 >= P_1 >= ... >= P_n > 0, drawn as a Young
/// diagram. Immutable value type; P_k reads as 0 past the last part.
class Partition {
public:
    Partition() = default;

    /// Sort descending, strip zeros. Throws DomainError on negative entries.
    static Partition normalized(std::vector<int> values);

    /// Trusted constructor: `parts` must already be weakly decreasing and
    /// strictly positive.
    static Partition from_sorted(std::vector<int> parts);

    /// Parse the canonical text encoding "p0,p1,...,pn"; "0" is the empty
    /// partition. Input is normalized.
    static Partition parse(std::string_view text);

    std::string str() const;

    /// P_i, with P_i = 0 for i >= rows(). i must be nonnegative.
    int part(int i) const {
        return i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
    }

    int rows() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    /// Componentwise `other <= this` (Young-diagram containment).
    bool contains(const Partition& other) const;

    /// Copy with row i incremented by one box. No validity check beyond the
    /// result being weakly decreasing (asserted).
    Partition with_box_added(int row) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct Corner {
    int row;
    int diagonal;
    bool operator==(const Corner&) const = default;
};

/// Addable and removable corners of a Young diagram, with their diagonal
/// values P_i - i (addable) and P_i - i - 1 (removable). Diagonal values are
/// pairwise distinct and strictly decreasing in the row index.
struct CornerSet {
    std::vector<Corner> addable;
    std::vector<Corner> removable;
};

CornerSet corners(const Partition& p);

/// Strictly increasing integer sequence a_0 < a_1 < ... < a_r, with the
/// convention a_{r+1} = +inf where an operation reads out of range.
/// Vanishing sequences are nonnegative; displacement preserves that.
class VanishingSequence {
public:
    VanishingSequence() = default;

    /// Throws DomainError unless strictly increasing and nonempty.
    explicit VanishingSequence(std::vector<int> entries);

    static VanishingSequence parse(std::string_view text);
    std::string str() const;

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[i]; }
    bool nonnegative() const { return entries_.empty() || entries_.front() >= 0; }

    bool operator==(const VanishingSequence&) const = default;

private:
    std::vector<int> entries_;
};

/// a_i = i + P_{r-i}. Requires r + 1 >= rows(P) (DomainError otherwise).
VanishingSequence to_vanishing(const Partition& p, int r);

/// Inverse of to_vanishing: P_{r-i} = a_i - i, zero-stripped; returns (P, r).
/// Requires nonnegative entries.
std::pair<Partition, int> from_vanishing(const VanishingSequence& a);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts())
            h = h * 1099511628211ull + static_cast<std::size_t>(v);
        return h;
    }
};

}  // namespace ydc
