#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ydc/partition.hpp"

namespace ydc {

/// A numerical semigroup: cofinite additively closed subset of the
/// nonnegative integers containing 0, stored by its (finite) gap set.
class NumericalSemigroup {
public:
    NumericalSemigroup() = default;  // the full semigroup Z_{>=0}

    /// Throws NotASemigroup (DomainError) when the complement of `gaps` is
    /// not closed under addition or a gap is nonpositive.
    static NumericalSemigroup from_gaps(std::vector<int> gaps);

    /// Gap set of the monoid generated by `generators`. Throws DomainError
    /// when gcd > 1 (infinitely many gaps).
    static NumericalSemigroup from_generators(const std::vector<int>& generators);

    /// Textual forms "gaps:1,3,5" and "gens:2,3".
    static NumericalSemigroup parse(std::string_view text);
    std::string str() const;  // always the gaps form

    const std::vector<int>& gaps() const { return gaps_; }
    int genus() const { return static_cast<int>(gaps_.size()); }
    bool contains(int n) const;

    /// s_n: the n-th element of the semigroup (s_0 = 0 < s_1 < ...).
    int element(int n) const;

    /// Sum of the gaps minus g(g+1)/2.
    long long weight() const;

    /// Twice the smallest positive element exceeds every gap.
    bool primitive() const;

    /// P_n = (g + n) - s_n, truncated at the first zero. P_0 = g and
    /// |P| = weight + genus.
    Partition to_partition() const;

    bool operator==(const NumericalSemigroup&) const = default;

private:
    std::vector<int> gaps_;  // sorted ascending
};

/// The shift argument's witness against primitivity: the smallest f > 2 s_1
/// outside S, with k = f - 2 s_1, so that s_1 + k lies in the shifted
/// semigroup S^k = {0, s_1 + k, s_2 + k, ...} but 2 (s_1 + k) does not.
struct ImprimitivityWitness {
    int f = 0;
    int k = 0;
};

std::optional<ImprimitivityWitness> imprimitivity_witness(const NumericalSemigroup& s);

/// All numerical semigroups of the given genus, by brute force over gap
/// subsets of [1, 2g - 1]; deterministic (gap-set lexicographic) order.
/// Requires genus <= 12.
std::vector<NumericalSemigroup> enumerate_semigroups(int genus);

/// A cofinite set of nonnegative integers: the exceptional prefix
/// s_0 < ... < s_{m-1} below `threshold`, plus every n >= threshold.
struct CofiniteSequence {
    std::vector<int> prefix;
    int threshold = 0;
    bool is_semigroup = false;  // contains 0 and additively closed
};

/// The twisted Weierstrass sequence s_n = (g + n) - P_n. Requires
/// g >= P_0 (DomainError otherwise).
CofiniteSequence partition_to_sequence(const Partition& p, int g);

}  // namespace ydc
