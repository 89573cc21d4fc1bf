#pragma once

// How many distinct tunnels a torus knot has, decided by comparing the
// cabling invariants of the middle, upper and lower tunnels.
//
// Case I:   |p - q| = 1. All three tunnels coincide.
// Case II:  not Case I, but p = +-1 mod q or q = +-1 mod p. With p > q the
//           middle and upper tunnels coincide and the lower one is distinct.
// Case III: everything else. Three distinct tunnels; the middle tunnel is
//           regular.

#include "torus_tunnels/cabling.hpp"

#include <string_view>
#include <vector>

namespace torus_tunnels {

enum class CaseLabel { I, II, III };

std::string_view to_string(CaseLabel label);
CaseLabel parse_case_label(std::string_view text);

struct TunnelClassification {
    CaseLabel case_label = CaseLabel::III;
    int distinct_count = 3;
    /// Equivalence classes in the orientation p > q, each listed in
    /// middle/upper/lower order.
    std::vector<std::vector<TunnelKind>> coincidences;

    friend bool operator==(const TunnelClassification&, const TunnelClassification&) = default;
};

/// Case label from the congruence conditions alone.
CaseLabel case_of(const BigInt& p, const BigInt& q);

/// Partitions {middle, upper, lower} by equality of cabling invariants.
/// Throws std::logic_error if the partition disagrees with case_of.
TunnelClassification classify(const BigInt& p, const BigInt& q);

/// The partition step of classify for sequences already computed on the
/// canonical pair (p,q), p > q.
TunnelClassification classify_sequences(const BigInt& p, const BigInt& q, const CablingSequence& middle,
                                        const CablingSequence& upper, const CablingSequence& lower);

/// Slope sequences predicted in closed form for a Case II knot with p > q:
/// p = mq + 1 gives [1/(2m+1)], 4m+1, ..., 2m(q-1)+1 for the upper tunnel,
/// p = mq - 1 gives [1/(2m-1)], 4m-1, ..., 2m(q-1)-1. The lower tunnel runs
/// through 3, 5, ..., 2q-1 with each value repeated m times, except that 3
/// (and for p = mq - 1 also 2q-1) appears m-1 times.
///
/// For q = 2 both branches apply; the p = mq + 1 branch is used.
struct CaseTwoForms {
    CablingSequence upper_form;
    CablingSequence lower_form;
};

CaseTwoForms case2_closed_forms(const BigInt& p, const BigInt& q);

/// [1/3], 5, 7, ..., 2n-1 for the Case I knot (n+1, n).
CablingSequence case1_closed_form(const BigInt& p, const BigInt& q);

/// True iff some binary invariant of the middle tunnel is 1.
bool is_middle_regular(const BigInt& p, const BigInt& q);

}  // namespace torus_tunnels
