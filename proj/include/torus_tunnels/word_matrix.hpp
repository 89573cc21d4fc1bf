#pragma once

// Generator words in U = [[1,1],[0,1]] and L = [[1,0],[1,1]], their
// descending partial products, and the slope/intermediate read off a product.

#include "torus_tunnels/arith.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace torus_tunnels {

enum class Generator { U, L };

/// 2x2 integer matrix with rows (a,b) and (c,d).
struct Mat2 {
    BigInt a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    static Mat2 of(Generator g);
    /// g^n for n >= 0, in closed form.
    static Mat2 power(Generator g, const BigInt& n);

    BigInt determinant() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// A maximal block of equal letters occupying indices
/// [first_index, first_index + length).
struct GeneratorRun {
    Generator letter;
    BigInt first_index;
    BigInt length;

    friend bool operator==(const GeneratorRun&, const GeneratorRun&) = default;
};

/// The word A_i, i = -n1 ... N, attached to a continued fraction
/// [n1, ..., nk]. Stored run-length encoded: the leading block of n1 L's can
/// be arbitrarily long while contributing a single closed-form factor.
class GeneratorWord {
  public:
    GeneratorWord(BigInt start_index, std::vector<GeneratorRun> runs);

    const BigInt& start_index() const noexcept { return start_index_; }
    /// N, the index of the last stored letter.
    BigInt end_index() const;
    BigInt size() const { return end_index() - start_index_ + 1; }
    const std::vector<GeneratorRun>& runs() const noexcept { return runs_; }

    Generator at(const BigInt& index) const;
    /// Letters for i = start_index ... N in order.
    std::vector<Generator> letters() const;

  private:
    BigInt start_index_;
    std::vector<GeneratorRun> runs_;
};

/// Requires at least two terms. The trailing letter at index N+1 is omitted
/// since no cabling corresponds to it.
GeneratorWord generator_word(const ContinuedFraction& cf);

/// M_0 ... M_N with M_t = A_t * A_{t-1} * ... * A_{-n1}.
std::vector<Mat2> partial_products(const GeneratorWord& word);

/// a*d + b*c.
BigInt slope_of_matrix(const Mat2& m);

/// Row sum (a+c, b+d).
std::pair<BigInt, BigInt> intermediate_of_matrix(const Mat2& m);

}  // namespace torus_tunnels
