#pragma once

// Upper and lower tunnels. Both are semisimple, so their cabling sequences
// are determined by the slopes alone.

#include "torus_tunnels/cabling.hpp"

namespace torus_tunnels {

/// p_k = ceil(k p / q) for k = 1 ... q, and k0 = min{k | p_k > 1}.
struct PkProfile {
    BigInt p;
    BigInt q;
    std::vector<BigInt> pk;  // pk[k - 1] = p_k
    BigInt k0;

    const BigInt& at(std::size_t k) const { return pk.at(k - 1); }

    friend bool operator==(const PkProfile&, const PkProfile&) = default;
};

/// Requires p, q >= 2 coprime; negative inputs are validated and reduced to
/// (|p|,|q|).
PkProfile pk_profile(const BigInt& p, const BigInt& q);

/// Slopes [1/(2 p_{k0} - 1)], 2 p_{k0+1} - 1, ..., 2 p_{q-1} - 1 computed on
/// (|p|,|q|) without reordering, negated when p*q < 0.
CablingSequence upper_sequence(const BigInt& p, const BigInt& q);

/// The lower tunnel of K_{p,q} is the upper tunnel of K_{q,p}.
CablingSequence lower_sequence(const BigInt& p, const BigInt& q);

}  // namespace torus_tunnels
