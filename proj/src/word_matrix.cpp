#include "torus_tunnels/word_matrix.hpp"

#include <ostream>

namespace torus_tunnels {

Mat2 Mat2::of(Generator g) { return power(g, 1); }

Mat2 Mat2::power(Generator g, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("Mat2::power: negative exponent");
    Mat2 m;
    if (g == Generator::U)
        m.b = n;
    else
        m.c = n;
    return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
}

GeneratorWord::GeneratorWord(BigInt start_index, std::vector<GeneratorRun> runs)
    : start_index_(std::move(start_index)), runs_(std::move(runs)) {
    if (runs_.empty()) throw std::invalid_argument("GeneratorWord: empty word");
}

BigInt GeneratorWord::end_index() const {
    const GeneratorRun& last = runs_.back();
    return last.first_index + last.length - 1;
}

Generator GeneratorWord::at(const BigInt& index) const {
    for (const GeneratorRun& run : runs_) {
        if (index >= run.first_index && index < run.first_index + run.length) return run.letter;
    }
    throw std::out_of_range("GeneratorWord::at: index outside the word");
}

std::vector<Generator> GeneratorWord::letters() const {
    std::vector<Generator> out;
    for (const GeneratorRun& run : runs_) {
        for (BigInt i = 0; i < run.length; ++i) out.push_back(run.letter);
    }
    return out;
}

GeneratorWord generator_word(const ContinuedFraction& cf) {
    const auto& n = cf.terms;
    if (n.size() < 2) throw std::invalid_argument("generator_word: continued fraction needs k >= 2");

    std::vector<GeneratorRun> runs;
    runs.push_back({Generator::L, -n[0], n[0]});
    BigInt next_index = 0;
    Generator letter = Generator::U;
    for (std::size_t j = 1; j < n.size(); ++j) {
        BigInt length = (j + 1 == n.size()) ? BigInt(n[j] - 1) : n[j];
        if (length > 0) runs.push_back({letter, next_index, length});
        next_index += length;
        letter = (letter == Generator::U) ? Generator::L : Generator::U;
    }
    return GeneratorWord(-n[0], std::move(runs));
}

std::vector<Mat2> partial_products(const GeneratorWord& word) {
    const auto& runs = word.runs();
    // The first run covers the negative indices and collapses to one power.
    Mat2 acc = Mat2::power(runs.front().letter, runs.front().length);

    std::vector<Mat2> products;
    for (auto run = std::next(runs.begin()); run != runs.end(); ++run) {
        const Mat2 step = Mat2::of(run->letter);
        for (BigInt i = 0; i < run->length; ++i) {
            acc = step * acc;
            products.push_back(acc);
        }
    }
    return products;
}

BigInt slope_of_matrix(const Mat2& m) { return m.a * m.d + m.b * m.c; }

std::pair<BigInt, BigInt> intermediate_of_matrix(const Mat2& m) {
    return {m.a + m.c, m.b + m.d};
}

}  // namespace torus_tunnels
