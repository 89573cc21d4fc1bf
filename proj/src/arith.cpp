#include "torus_tunnels/arith.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace torus_tunnels {

namespace {

BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Floor-mod into [0, m) for m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

std::string_view to_string(TunnelKind kind) {
    switch (kind) {
        case TunnelKind::middle: return "middle";
        case TunnelKind::upper: return "upper";
        case TunnelKind::lower: return "lower";
    }
    return "?";
}

TunnelKind parse_tunnel_kind(std::string_view name) {
    if (name == "middle") return TunnelKind::middle;
    if (name == "upper") return TunnelKind::upper;
    if (name == "lower") return TunnelKind::lower;
    throw std::invalid_argument("unknown tunnel kind '" + std::string(name) + "'");
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt x = abs_of(a);
    BigInt y = abs_of(b);
    while (y != 0) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << '/' << r.den();
    return os;
}

SimpleSlope::SimpleSlope(const BigInt& num, const BigInt& den) {
    const Rational r(num, den);
    den_ = r.den();
    num_ = mod_floor(r.num(), den_);
}

std::ostream& operator<<(std::ostream& os, const SimpleSlope& s) {
    return os << '[' << s.num() << '/' << s.den() << ']';
}

ContinuedFraction cf_expand(const BigInt& p, const BigInt& q) {
    if (q < 2) throw std::invalid_argument("cf_expand: denominator must be at least 2");
    if (p <= q) throw std::invalid_argument("cf_expand: requires p > q");
    if (gcd(p, q) != 1) throw std::invalid_argument("cf_expand: p and q must be coprime");

    ContinuedFraction cf;
    BigInt num = p;
    BigInt den = q;
    while (den != 0) {
        BigInt quotient = num / den;
        BigInt rem = num % den;
        cf.terms.push_back(std::move(quotient));
        num = std::move(den);
        den = std::move(rem);
    }
    if (cf.terms.size() < 2 || cf.terms.back() < 2)
        throw std::logic_error("cf_expand: expansion violates the n_k >= 2 convention");
    return cf;
}

Rational cf_value(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("cf_value: empty continued fraction");
    // Evaluate from the innermost term outwards: x = n_j + 1/x.
    BigInt num = cf.terms.back();
    BigInt den = 1;
    for (auto it = std::next(cf.terms.rbegin()); it != cf.terms.rend(); ++it) {
        BigInt next_num = *it * num + den;
        den = std::move(num);
        num = std::move(next_num);
    }
    return Rational(std::move(num), std::move(den));
}

BigInt mod_inverse(const BigInt& q, const BigInt& p) {
    if (p < 2) throw std::invalid_argument("mod_inverse: modulus must be at least 2");

    // Invariant: old_r = old_s * q (mod p), r = s * q (mod p).
    BigInt old_r = mod_floor(q, p);
    BigInt r = p;
    BigInt old_s = 1;
    BigInt s = 0;
    while (r != 0) {
        const BigInt quotient = old_r / r;
        BigInt next_r = old_r - quotient * r;
        old_r = std::move(r);
        r = std::move(next_r);
        BigInt next_s = old_s - quotient * s;
        old_s = std::move(s);
        s = std::move(next_s);
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return mod_floor(old_s, p);
}

std::string format_pair(const BigInt& p, const BigInt& q) {
    std::ostringstream os;
    os << '(' << p << ',' << q << ')';
    return os.str();
}

TorusKnotParams normalize_params(const BigInt& p, const BigInt& q, TunnelKind kind) {
    const BigInt g = gcd(p, q);
    if (g != 1) {
        std::ostringstream os;
        os << format_pair(p, q) << " is not a knot (gcd = " << g << ")";
        throw NotAKnot(os.str());
    }
    if (p == 0 || q == 0) throw NotAKnot(format_pair(p, q) + " is not a knot (zero coordinate)");

    TorusKnotParams params;
    params.p = p;
    params.q = q;
    params.canonical_p = abs_of(p);
    params.canonical_q = abs_of(q);
    if (std::min(params.canonical_p, params.canonical_q) <= 1)
        throw Unknot(format_pair(p, q) + " is the unknot");

    params.negate_slopes = (p < 0) != (q < 0);
    if (kind == TunnelKind::middle && params.canonical_p < params.canonical_q) {
        std::swap(params.canonical_p, params.canonical_q);
        params.swapped = true;
    }
    return params;
}

BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw std::invalid_argument("'" + std::string(text) + "' is not an integer");

    // cpp_int treats a leading 0 as an octal prefix.
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    BigInt value{std::string(digits)};
    if (text.front() == '-') value = -value;
    return value;
}

}  // namespace torus_tunnels
