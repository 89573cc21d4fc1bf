#pragma once

#include "torus_tunnels/cabling.hpp"

namespace torus_tunnels {

/// Cabling sequence of the middle tunnel of K_{p,q}.
///
/// The pair is reduced to |p| > |q| >= 2 and p/q = [n1, ..., nk] is read as
/// the generator word A_i. Then m_0 = [1/(2 n1 + 1)], m_t = a_t d_t + b_t c_t
/// for the partial product M_t, s_t = 1 iff A_t != A_{t-1}, and the t-th
/// intermediate knot is the row sum of M_t. When p*q < 0 every slope is
/// negated; the binaries are unchanged.
///
/// Throws NotAKnot or Unknot for invalid pairs.
CablingSequence middle_sequence(const BigInt& p, const BigInt& q);

}  // namespace torus_tunnels
