#include "torus_tunnels/semisimple_tunnel.hpp"

namespace torus_tunnels {

PkProfile pk_profile(const BigInt& p, const BigInt& q) {
    const TorusKnotParams params = normalize_params(p, q, TunnelKind::upper);

    PkProfile profile;
    profile.p = params.canonical_p;
    profile.q = params.canonical_q;

    const BigInt& cp = profile.p;
    const BigInt& cq = profile.q;
    // k p + q - 1 grows by p each step; its quotient by q is ceil(k p / q).
    BigInt numerator = cp + cq - 1;
    profile.k0 = 0;
    for (BigInt k = 1; k <= cq; ++k) {
        BigInt ceiling = numerator / cq;
        if (profile.k0 == 0 && ceiling > 1) profile.k0 = k;
        profile.pk.push_back(std::move(ceiling));
        numerator += cp;
    }
    return profile;
}

CablingSequence upper_sequence(const BigInt& p, const BigInt& q) {
    const PkProfile profile = pk_profile(p, q);
    const std::size_t k0 = static_cast<std::size_t>(profile.k0);
    const std::size_t cq = profile.pk.size();

    CablingSequence seq;
    seq.kind = TunnelKind::upper;
    seq.simple_slope = SimpleSlope(1, 2 * profile.at(k0) - 1);
    for (std::size_t k = k0 + 1; k < cq; ++k) seq.slopes.push_back(2 * profile.at(k) - 1);

    if ((p < 0) != (q < 0)) {
        seq.simple_slope = seq.simple_slope.negated();
        for (BigInt& m : seq.slopes) m = -m;
    }
    return seq;
}

CablingSequence lower_sequence(const BigInt& p, const BigInt& q) {
    CablingSequence seq = upper_sequence(q, p);
    seq.kind = TunnelKind::lower;
    return seq;
}

}  // namespace torus_tunnels
