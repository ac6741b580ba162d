#include "ydc/brill_noether.hpp"

#include "ydc/errors.hpp"

namespace ydc {

BnRecord brill_noether(int g, int d, int r) {
    if (g < 0) throw DomainError("genus must be nonnegative");
    BnRecord rec;
    rec.g = g;
    rec.d = d;
    rec.r = r;
    long long side = g - d + r;
    rec.rho = g - static_cast<long long>(r + 1) * side;
    if (side > 0 && r + 1 > 0)
        rec.box = Partition::from_sorted(
            std::vector<int>(static_cast<std::size_t>(r + 1), static_cast<int>(side)));
    rec.expected_w_dim = 3ll * g - 3 + rec.rho;
    rec.expected_codim = rec.box.weight();
    // 0 > rho >= -r g/(r+2) + 3r - 3, cleared of division: compare
    // (r+2) rho against -r g + (3r-3)(r+2).
    rec.in_theorem_range = r >= 1 && side >= 2 && rec.rho < 0 &&
                           (r + 2) * rec.rho >=
                               -static_cast<long long>(r) * g +
                                   static_cast<long long>(3 * r - 3) * (r + 2);
    return rec;
}

int genus_threshold(const Partition& p, const DifficultyEngine& engine) {
    return (p.weight() + engine.difficulty(p).delta) / 2;
}

bool node_compatibility(const VanishingSequence& a1, const VanishingSequence& a2, int d) {
    if (a1.size() != a2.size())
        throw DomainError("vanishing sequences must have equal length");
    int r = a1.size() - 1;
    for (int i = 0; i <= r; ++i)
        if (a1[i] + a2[r - i] != d) return false;
    return true;
}

long long proper_dimension(int g, int d, int r,
                           std::span<const VanishingSequence> ram) {
    long long moduli;
    if (g >= 2)
        moduli = 3ll * g - 3 + static_cast<long long>(ram.size());
    else if (g == 1)
        moduli = static_cast<long long>(ram.size());
    else
        moduli = std::max<long long>(0, static_cast<long long>(ram.size()) - 3);

    long long ramification = 0;
    for (const VanishingSequence& a : ram) {
        if (a.size() != r + 1)
            throw DomainError("ramification data must have length r + 1");
        for (int j = 0; j <= r; ++j) ramification += a[j] - j;
    }
    long long rho = g - static_cast<long long>(r + 1) * (g - d + r);
    return moduli + rho - ramification;
}

}  // namespace ydc
