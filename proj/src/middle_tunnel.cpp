#include "torus_tunnels/middle_tunnel.hpp"

#include "torus_tunnels/word_matrix.hpp"

namespace torus_tunnels {

std::vector<std::uint8_t> effective_binaries(const CablingSequence& seq) {
    if (seq.kind != TunnelKind::middle)
        return std::vector<std::uint8_t>(seq.slopes.empty() ? 0 : seq.slopes.size() - 1, 0);
    return seq.binaries;
}

bool same_invariants(const CablingSequence& x, const CablingSequence& y) {
    return x.simple_slope == y.simple_slope && x.slopes == y.slopes &&
           effective_binaries(x) == effective_binaries(y);
}

Rational rho_invariant(const CablingSequence& seq) {
    if (seq.slopes.empty()) return Rational(seq.simple_slope.num(), seq.simple_slope.den());
    BigInt r = seq.slopes.back() % 2;
    if (r < 0) r += 2;
    return Rational(std::move(r));
}

CablingSequence middle_sequence(const BigInt& p, const BigInt& q) {
    const TorusKnotParams params = normalize_params(p, q, TunnelKind::middle);
    const ContinuedFraction cf = cf_expand(params.canonical_p, params.canonical_q);
    const GeneratorWord word = generator_word(cf);
    const std::vector<Mat2> products = partial_products(word);

    CablingSequence seq;
    seq.kind = TunnelKind::middle;
    seq.simple_slope = SimpleSlope(1, 2 * cf.terms.front() + 1);

    seq.intermediates.reserve(products.size());
    for (const Mat2& m : products) {
        auto [a, b] = intermediate_of_matrix(m);
        seq.intermediates.push_back({std::move(a), std::move(b)});
    }

    if (products.size() > 1) {
        seq.slopes.reserve(products.size() - 1);
        for (std::size_t t = 1; t < products.size(); ++t) seq.slopes.push_back(slope_of_matrix(products[t]));

        // Letters A_0 ... A_N, which sit after the leading run of L's.
        std::vector<Generator> tail;
        for (auto run = std::next(word.runs().begin()); run != word.runs().end(); ++run) {
            for (BigInt i = 0; i < run->length; ++i) tail.push_back(run->letter);
        }
        for (std::size_t t = 2; t < tail.size(); ++t) seq.binaries.push_back(tail[t] != tail[t - 1] ? 1 : 0);
    }

    if (params.negate_slopes) {
        seq.simple_slope = seq.simple_slope.negated();
        for (BigInt& m : seq.slopes) m = -m;
    }
    return seq;
}

}  // namespace torus_tunnels
