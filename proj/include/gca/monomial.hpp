#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gca/grade_vec.hpp"

namespace gca {

// Squares of the generators: e_g * e_g = squares[g-1] * 1. The default is
// +1 for every generator; a -1 entry gives the corresponding Clifford
// variant.
struct SquareConvention {
    std::vector<int> squares;

    static SquareConvention plus_ones(int n) {
        return SquareConvention{std::vector<int>(static_cast<std::size_t>(n), +1)};
    }
    static SquareConvention from(std::vector<int> q) {
        for (int s : q)
            if (s != 1 && s != -1)
                throw std::invalid_argument("SquareConvention: entries must be +1 or -1");
        return SquareConvention{std::move(q)};
    }
    int ambient() const { return static_cast<int>(squares.size()); }
};

// Signed word in anticommuting generators e_1..e_n. The word is strictly
// increasing; the empty word is the unit.
struct SignedMonomial {
    int sign = +1;
    std::vector<int> word;
    int ambient = 0;

    static SignedMonomial unit(int n) {
        check_ambient_(n);
        return {+1, {}, n};
    }
    static SignedMonomial make(int n, std::vector<int> w, int s = +1) {
        check_ambient_(n);
        if (s != 1 && s != -1)
            throw std::invalid_argument("SignedMonomial: sign must be +1 or -1");
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] < 1 || w[t] > n)
                throw std::invalid_argument("SignedMonomial: generator index out of range");
            if (t > 0 && w[t - 1] >= w[t])
                throw std::invalid_argument("SignedMonomial: word must be strictly increasing");
        }
        return {s, std::move(w), n};
    }

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;

private:
    static void check_ambient_(int n) {
        if (n < 1 || n > GradeVec::max_width)
            throw std::invalid_argument("SignedMonomial: ambient generator count out of range");
    }
};

// The exchange rule: concatenate the two words, bubble-sort to increasing
// order flipping the sign once per exchange of two distinct generators,
// then collapse each adjacent equal pair e_g e_g into its square.
inline SignedMonomial mono_mul(const SignedMonomial& a, const SignedMonomial& b,
                               const SquareConvention& conv) {
    if (a.ambient != b.ambient || conv.ambient() != a.ambient)
        throw std::invalid_argument("mono_mul: ambient generator count mismatch");

    std::vector<int> w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    int sign = a.sign * b.sign;

    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (w[t] > w[t + 1]) {
                std::swap(w[t], w[t + 1]);
                sign = -sign;
                moved = true;
            }
    }
    for (bool cancelled = true; cancelled;) {
        cancelled = false;
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (w[t] == w[t + 1]) {
                sign *= conv.squares[static_cast<std::size_t>(w[t]) - 1];
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(t),
                        w.begin() + static_cast<std::ptrdiff_t>(t) + 2);
                cancelled = true;
                break;
            }
    }
    return {sign, std::move(w), a.ambient};
}

// Indicator vector of the word's generator set.
inline GradeVec grade_of(const SignedMonomial& m) {
    GradeVec g(m.ambient);
    for (int t : m.word) g.set_bit(t - 1, 1);
    return g;
}

// Exponent of (-1) in mono_mul(a,b) == (-1)^e * mono_mul(b,a). Equals the
// plain degree parity <grade(a),grade(b)> plus a correction term that
// vanishes whenever either word has even length (in particular on the
// even-word range where the graded-commutativity condition lives).
inline int mono_sign_of_swap(const SignedMonomial& a, const SignedMonomial& b) {
    const GradeVec ga = grade_of(a);
    const GradeVec gb = grade_of(b);
    return (parity(ga, gb) + ga.weight() * gb.weight()) & 1;
}

inline std::string to_string(const SignedMonomial& m) {
    std::string s = m.sign < 0 ? "-" : "+";
    if (m.word.empty()) return s + "1";
    s += "e[";
    for (std::size_t t = 0; t < m.word.size(); ++t) {
        if (t) s += ',';
        s += std::to_string(m.word[t]);
    }
    s += ']';
    return s;
}

}  // namespace gca
