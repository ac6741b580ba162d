#pragma once

#include <string>
#include <vector>

#include "ydc/difficulty.hpp"
#include "ydc/partition.hpp"
#include "ydc/progression.hpp"

namespace ydc {

/// How the elliptic bridge realizing a progression is pinned down: a residue
/// class mod d needs a d-torsion point, a singleton a non-torsion point, the
/// empty progression a generic line bundle.
enum class BridgeKind { Torsion, NonTorsion, Generic };

struct BridgeTrace {
    Progression lambda;
    BridgeKind kind = BridgeKind::Generic;
    int displaced = 0;  // places where the sequence moved
    bool operator==(const BridgeTrace&) const = default;
};

/// Combinatorial state of a chain of elliptic bridges: each step raises the
/// genus and degree by one and replaces the vanishing sequence by its upward
/// displacement; the chain stays refined while every sequence is its own
/// downward displacement.
struct ChainState {
    int genus = 0;
    int degree = 0;
    VanishingSequence a;
    bool refined = true;
    std::vector<BridgeTrace> trace;
};

ChainState chain_start(int degree, VanishingSequence a);
ChainState chain_step(ChainState state, const Progression& lambda);

std::string bridge_kind_str(const BridgeTrace& t);

/// Replays a difficulty certificate as a bridge chain: start at genus 0 with
/// r = g_final and a = (0, 1, ..., r), shift each step's progression by
/// r + 1, then pad with generic bridges to genus g_final. The final state is
/// refined and carries the certificate's final partition.
/// Throws PreconditionError when g_final is smaller than the number of
/// steps, CertificateInvalid when the replay breaks refinedness or lands on
/// the wrong partition.
ChainState realize_certificate(const ValidSequence& cert, int g_final);

}  // namespace ydc
