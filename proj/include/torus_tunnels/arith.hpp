#pragma once

// Exact integer and rational primitives shared by every tunnel computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torus_tunnels {

/// Signed integer of arbitrary magnitude. Arithmetic never wraps.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when (p,q) does not describe a knot: a zero coordinate or gcd != 1.
class NotAKnot : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when (p,q) is coprime but describes the trivial knot.
class Unknot : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class TunnelKind { middle, upper, lower };

std::string_view to_string(TunnelKind kind);
/// Accepts "middle", "upper" or "lower"; throws std::invalid_argument otherwise.
TunnelKind parse_tunnel_kind(std::string_view name);

/// Nonnegative gcd; gcd(0,0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Fraction in lowest terms with a positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(BigInt num, BigInt den);
    explicit Rational(BigInt integer) : num_(std::move(integer)) {}

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;

  private:
    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A class [num/den] in Q/Z, stored by its representative in [0,1).
class SimpleSlope {
  public:
    SimpleSlope() = default;
    /// Any fraction with den != 0; the representative is reduced into [0,1).
    SimpleSlope(const BigInt& num, const BigInt& den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    SimpleSlope negated() const { return SimpleSlope(-num_, den_); }

    friend bool operator==(const SimpleSlope&, const SimpleSlope&) = default;

  private:
    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const SimpleSlope& s);

/// Positive-term expansion [n1, ..., nk] of a fraction p/q.
struct ContinuedFraction {
    std::vector<BigInt> terms;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Euclidean algorithm with positive remainders. Requires p > q >= 2 and
/// gcd(p,q) = 1; the last term is then always >= 2.
ContinuedFraction cf_expand(const BigInt& p, const BigInt& q);

/// Exact value of n1 + 1/(n2 + 1/(... + 1/nk)).
Rational cf_value(const ContinuedFraction& cf);

/// q' with 0 < q' < p and q*q' = 1 (mod p). Requires p >= 2 and gcd(p,q) = 1.
BigInt mod_inverse(const BigInt& q, const BigInt& p);

/// A torus knot (p,q) together with the canonical positive pair the tunnel
/// formulas are evaluated on.
struct TorusKnotParams {
    BigInt p;
    BigInt q;
    BigInt canonical_p;
    BigInt canonical_q;
    bool negate_slopes = false;  // p*q < 0
    bool swapped = false;        // canonical pair is (|q|,|p|)

    friend bool operator==(const TorusKnotParams&, const TorusKnotParams&) = default;
};

/// Validates (p,q) and reduces it to canonical form. Middle tunnels are
/// additionally oriented so that canonical_p > canonical_q.
///
/// Throws NotAKnot for a zero coordinate or non-coprime pair, Unknot when
/// min(|p|,|q|) <= 1.
TorusKnotParams normalize_params(const BigInt& p, const BigInt& q, TunnelKind kind);

/// "(p,q)" with no interior spaces.
std::string format_pair(const BigInt& p, const BigInt& q);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

}  // namespace torus_tunnels
