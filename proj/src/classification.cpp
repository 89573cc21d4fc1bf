#include "torus_tunnels/classification.hpp"

#include "torus_tunnels/middle_tunnel.hpp"
#include "torus_tunnels/semisimple_tunnel.hpp"

#include <array>
#include <string>

namespace torus_tunnels {

namespace {

bool congruent_pm_one(const BigInt& a, const BigInt& modulus) {
    const BigInt r = a % modulus;
    return r == 1 || r == modulus - 1;
}

// Canonical p > q >= 2 pair.
std::pair<BigInt, BigInt> canonical_pair(const BigInt& p, const BigInt& q) {
    const TorusKnotParams params = normalize_params(p, q, TunnelKind::middle);
    return {params.canonical_p, params.canonical_q};
}

}  // namespace

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
    }
    return "?";
}

CaseLabel parse_case_label(std::string_view text) {
    if (text == "I") return CaseLabel::I;
    if (text == "II") return CaseLabel::II;
    if (text == "III") return CaseLabel::III;
    throw std::invalid_argument("unknown case label '" + std::string(text) + "'");
}

CaseLabel case_of(const BigInt& p, const BigInt& q) {
    const auto [cp, cq] = canonical_pair(p, q);
    if (cp - cq == 1) return CaseLabel::I;
    if (congruent_pm_one(cp, cq) || congruent_pm_one(cq, cp)) return CaseLabel::II;
    return CaseLabel::III;
}

TunnelClassification classify(const BigInt& p, const BigInt& q) {
    const auto [cp, cq] = canonical_pair(p, q);
    return classify_sequences(cp, cq, middle_sequence(cp, cq), upper_sequence(cp, cq), lower_sequence(cp, cq));
}

TunnelClassification classify_sequences(const BigInt& cp, const BigInt& cq, const CablingSequence& middle,
                                        const CablingSequence& upper, const CablingSequence& lower) {
    const std::array<const CablingSequence*, 3> tunnels{&middle, &upper, &lower};

    TunnelClassification result;
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < tunnels.size(); ++i) {
        std::size_t cls = 0;
        while (cls < representatives.size() && !same_invariants(*tunnels[representatives[cls]], *tunnels[i])) ++cls;
        if (cls == representatives.size()) {
            representatives.push_back(i);
            result.coincidences.emplace_back();
        }
        result.coincidences[cls].push_back(tunnels[i]->kind);
    }
    result.distinct_count = static_cast<int>(result.coincidences.size());
    result.case_label = case_of(cp, cq);

    using enum TunnelKind;
    const std::vector<std::vector<TunnelKind>> expected = [&] {
        switch (result.case_label) {
            case CaseLabel::I: return std::vector<std::vector<TunnelKind>>{{middle, upper, lower}};
            case CaseLabel::II: return std::vector<std::vector<TunnelKind>>{{middle, upper}, {lower}};
            case CaseLabel::III: break;
        }
        return std::vector<std::vector<TunnelKind>>{{middle}, {upper}, {lower}};
    }();
    if (result.coincidences != expected)
        throw std::logic_error("classify: invariant comparison disagrees with case " +
                               std::string(to_string(result.case_label)) + " for " + format_pair(cp, cq));
    return result;
}

CaseTwoForms case2_closed_forms(const BigInt& p, const BigInt& q) {
    const auto [cp, cq] = canonical_pair(p, q);
    if (case_of(cp, cq) != CaseLabel::II)
        throw std::invalid_argument("case2_closed_forms: " + format_pair(p, q) + " is not a case II knot");

    // In the p > q orientation case II means p = mq +- 1.
    const bool plus_branch = cp % cq == 1;
    const BigInt m = plus_branch ? BigInt((cp - 1) / cq) : BigInt((cp + 1) / cq);
    const int shift = plus_branch ? 1 : -1;

    CaseTwoForms forms;
    forms.upper_form.kind = TunnelKind::upper;
    forms.upper_form.simple_slope = SimpleSlope(1, 2 * m + shift);
    for (BigInt j = 2; j < cq; ++j) forms.upper_form.slopes.push_back(2 * m * j + shift);

    forms.lower_form.kind = TunnelKind::lower;
    forms.lower_form.simple_slope = SimpleSlope(1, 3);
    for (BigInt j = 2; j <= cq; ++j) {
        const bool short_run = j == 2 || (!plus_branch && j == cq);
        const BigInt repeats = short_run ? BigInt(m - 1) : m;
        for (BigInt r = 0; r < repeats; ++r) forms.lower_form.slopes.push_back(2 * j - 1);
    }
    return forms;
}

CablingSequence case1_closed_form(const BigInt& p, const BigInt& q) {
    const auto [cp, cq] = canonical_pair(p, q);
    if (cp - cq != 1) throw std::invalid_argument("case1_closed_form: " + format_pair(p, q) + " is not a case I knot");

    CablingSequence seq;
    seq.kind = TunnelKind::upper;
    seq.simple_slope = SimpleSlope(1, 3);
    for (BigInt j = 2; j < cq; ++j) seq.slopes.push_back(2 * j + 1);
    return seq;
}

bool is_middle_regular(const BigInt& p, const BigInt& q) {
    const CablingSequence seq = middle_sequence(p, q);
    for (std::uint8_t s : seq.binaries) {
        if (s != 0) return true;
    }
    return false;
}

}  // namespace torus_tunnels
