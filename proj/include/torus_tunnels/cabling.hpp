#pragma once

#include "torus_tunnels/arith.hpp"

#include <cstdint>
#include <vector>

namespace torus_tunnels {

struct KnotPair {
    BigInt p;
    BigInt q;

    friend bool operator==(const KnotPair&, const KnotPair&) = default;
};

/// Invariants of one tunnel's cabling sequence.
///
/// `slopes` holds m_1 ... m_N (the simple slope m_0 is kept separately).
/// `binaries` holds s_2 ... s_N for middle tunnels and is empty for upper
/// and lower tunnels, whose binary invariants all vanish.
/// `intermediates` holds the torus knot produced by each cabling,
/// t = 0 ... N; only middle tunnels populate it.
struct CablingSequence {
    TunnelKind kind = TunnelKind::middle;
    SimpleSlope simple_slope;
    std::vector<BigInt> slopes;
    std::vector<std::uint8_t> binaries;
    std::vector<KnotPair> intermediates;

    /// Total number of cablings, N + 1.
    std::size_t length() const noexcept { return slopes.size() + 1; }

    friend bool operator==(const CablingSequence&, const CablingSequence&) = default;
};

/// Binary invariants s_2 ... s_N with the all-zero list of a semisimple
/// tunnel made explicit.
std::vector<std::uint8_t> effective_binaries(const CablingSequence& seq);

/// Two tunnels are equivalent iff their simple slopes, slope lists and
/// binary invariants agree.
bool same_invariants(const CablingSequence& x, const CablingSequence& y);

/// Last slope reduced modulo 2, as 0/1 or 1/1. A sequence with only a simple
/// slope [a/b] reports its stored representative a/b instead.
Rational rho_invariant(const CablingSequence& seq);

}  // namespace torus_tunnels
