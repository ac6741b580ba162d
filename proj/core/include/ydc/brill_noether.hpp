#pragma once

#include <span>

#include "ydc/difficulty.hpp"
#include "ydc/partition.hpp"

namespace ydc {

/// Brill-Noether arithmetic for (g, d, r): rho = g - (r+1)(g-d+r), the box
/// partition ((g-d+r)^{r+1}) encoding the same data, and the exact-integer
/// test for the main theorem's range 0 > rho >= -r g/(r+2) + 3r - 3.
struct BnRecord {
    int g = 0, d = 0, r = 0;
    long long rho = 0;
    Partition box;
    long long expected_w_dim = 0;  // 3g - 3 + rho
    long long expected_codim = 0;  // |box|
    bool in_theorem_range = false;
};

BnRecord brill_noether(int g, int d, int r);

/// (|P| + delta(P)) / 2 -- an integer by the parity invariant. The genus at
/// and beyond which the certificate machinery applies to P.
int genus_threshold(const Partition& p, const DifficultyEngine& engine);

/// a1_i + a2_{r-i} = d for all i. Lengths must agree (DomainError).
bool node_compatibility(const VanishingSequence& a1, const VanishingSequence& a2, int d);

/// dim M_{g,s} + rho(g,d,r) - sum_i sum_j (a_j(p_i) - j), where s is the
/// number of marked points, i.e. the number of entries of `ram`; each entry
/// must have length r + 1. dim M_{g,s} is 3g - 3 + s for g >= 2, s for
/// g = 1, max(0, s - 3) for g = 0.
long long proper_dimension(int g, int d, int r,
                           std::span<const VanishingSequence> ram);

}  // namespace ydc
