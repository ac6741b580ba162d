#include "ydc/chain.hpp"

#include <numeric>
#include <sstream>

#include "ydc/displacement.hpp"
#include "ydc/errors.hpp"

namespace ydc {

ChainState chain_start(int degree, VanishingSequence a) {
    ChainState state;
    state.genus = 0;
    state.degree = degree;
    state.a = std::move(a);
    return state;
}

ChainState chain_step(ChainState state, const Progression& lambda) {
    VanishingSequence up = seq_displace(state.a, lambda, Direction::Up);
    VanishingSequence down = seq_displace(state.a, lambda, Direction::Down);

    BridgeTrace t;
    t.lambda = lambda;
    switch (lambda.kind()) {
        case Progression::Kind::Residue: t.kind = BridgeKind::Torsion; break;
        case Progression::Kind::Singleton: t.kind = BridgeKind::NonTorsion; break;
        case Progression::Kind::Empty: t.kind = BridgeKind::Generic; break;
    }
    for (int i = 0; i < state.a.size(); ++i)
        if (up[i] != state.a[i]) ++t.displaced;

    ++state.genus;
    ++state.degree;
    state.refined = state.refined && down == state.a;
    state.a = std::move(up);
    state.trace.push_back(std::move(t));
    return state;
}

std::string bridge_kind_str(const BridgeTrace& t) {
    switch (t.kind) {
        case BridgeKind::Torsion: {
            std::ostringstream os;
            os << "torsion(" << t.lambda.modulus() << ")";
            return os.str();
        }
        case BridgeKind::NonTorsion: return "non-torsion";
        case BridgeKind::Generic: return "generic";
    }
    return "generic";
}

ChainState realize_certificate(const ValidSequence& cert, int g_final) {
    if (g_final < static_cast<int>(cert.steps.size()))
        throw PreconditionError("final genus is smaller than the certificate length");

    int r = g_final;
    std::vector<int> identity(r + 1);
    std::iota(identity.begin(), identity.end(), 0);
    ChainState state = chain_start(r, VanishingSequence(std::move(identity)));

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const Step& step = cert.steps[i];
        state = chain_step(std::move(state), step.lambda.shifted(r + 1));
        if (!state.refined)
            throw CertificateInvalid("bridge " + std::to_string(i) +
                                     " broke refinedness");
        if (state.trace.back().displaced > 2)
            throw CertificateInvalid("bridge " + std::to_string(i) +
                                     " displaced more than two places");
        if (state.a != to_vanishing(step.partition, r))
            throw CertificateInvalid("bridge " + std::to_string(i) +
                                     " did not track the certificate partition");
    }
    while (state.genus < g_final)
        state = chain_step(std::move(state), Progression::empty());

    if (from_vanishing(state.a).first != cert.target())
        throw CertificateInvalid("final state does not carry the target partition");
    return state;
}

}  // namespace ydc
