#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gca/grading.hpp"
#include "gca/monomial.hpp"
#include "gca/structure_table.hpp"

namespace gca {

// Diagonal conjugation: basis_i -> signs[i] * basis_i. Applying it twice
// is the identity by construction.
struct Involution {
    std::vector<int> signs;

    static Involution from(std::vector<int> s) {
        if (s.empty() || s[0] != +1)
            throw std::invalid_argument("Involution: the unit must be fixed");
        for (int v : s)
            if (v != 1 && v != -1)
                throw std::invalid_argument("Involution: entries must be +1 or -1");
        return Involution{std::move(s)};
    }
    int dim() const { return static_cast<int>(signs.size()); }
};

// Conjugation fixing the unit and negating every other basis element; the
// standard conjugation of the built composition algebras.
inline Involution standard_conjugation(const StructureTable& t) {
    std::vector<int> s(static_cast<std::size_t>(t.dim()), -1);
    s[0] = +1;
    return Involution::from(std::move(s));
}

inline StructureTable build_reals() {
    return StructureTable({"1"}, {Cell{{Rational(1), 0}}}, /*euclidean_norm=*/true);
}

namespace detail {

inline std::string word_name(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s = "e[";
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (t) s += ',';
        s += std::to_string(word[t]);
    }
    s += ']';
    return s;
}

inline std::vector<int> word_of_mask(unsigned mask, int n) {
    std::vector<int> w;
    for (int g = 1; g <= n; ++g)
        if (mask & (1u << (g - 1))) w.push_back(g);
    return w;
}

inline unsigned mask_of_word(const std::vector<int>& w) {
    unsigned m = 0;
    for (int g : w) m |= (1u << (g - 1));
    return m;
}

}  // namespace detail

// Full algebra of signed words over n anticommuting generators with the
// given squares, basis indexed by generator subsets (index = bitmask).
inline StructureTable build_clifford(int n, const SquareConvention& conv) {
    if (n < 1 || n > 8) throw std::length_error("build_clifford: n must be in 1..8");
    if (conv.ambient() != n)
        throw std::invalid_argument("build_clifford: convention size mismatch");

    const int dim = 1 << n;
    std::vector<std::string> names;
    std::vector<SignedMonomial> basis;
    names.reserve(static_cast<std::size_t>(dim));
    basis.reserve(static_cast<std::size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        auto w = detail::word_of_mask(static_cast<unsigned>(m), n);
        names.push_back(detail::word_name(w));
        basis.push_back(SignedMonomial::make(n, std::move(w)));
    }

    std::vector<Cell> cells(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            SignedMonomial p = mono_mul(basis[static_cast<std::size_t>(i)],
                                        basis[static_cast<std::size_t>(j)], conv);
            cells[static_cast<std::size_t>(i) * dim + j] = {
                {Rational(p.sign), static_cast<int>(detail::mask_of_word(p.word))}};
        }
    return StructureTable(std::move(names), std::move(cells));
}

struct QuaternionBuild {
    StructureTable table;
    Grading grading;
};

// The 4-dimensional algebra on {1,i,j,k}. Every product is computed from
// the generator words 1 -> (), i -> e2 e3, j -> e1 e3, k -> e1 e2 with all
// squares +1; the attached grading is
//   1 -> (0,0,0), i -> (0,1,1), j -> (1,0,1), k -> (1,1,0).
inline QuaternionBuild build_quaternions() {
    const SquareConvention conv = SquareConvention::plus_ones(3);
    const std::array<SignedMonomial, 4> image = {
        SignedMonomial::unit(3),
        SignedMonomial::make(3, {2, 3}),
        SignedMonomial::make(3, {1, 3}),
        SignedMonomial::make(3, {1, 2}),
    };
    auto index_of = [&](const std::vector<int>& w) {
        for (std::size_t k = 0; k < image.size(); ++k)
            if (image[k].word == w) return static_cast<int>(k);
        throw std::logic_error("build_quaternions: product left the even-word span");
    };

    std::vector<Cell> cells(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            SignedMonomial p = mono_mul(image[static_cast<std::size_t>(i)],
                                        image[static_cast<std::size_t>(j)], conv);
            cells[static_cast<std::size_t>(i) * 4 + j] = {{Rational(p.sign), index_of(p.word)}};
        }

    Grading g{3,
              {GradeVec::of({0, 0, 0}), GradeVec::of({0, 1, 1}), GradeVec::of({1, 0, 1}),
               GradeVec::of({1, 1, 0})}};
    return {StructureTable({"1", "i", "j", "k"}, std::move(cells), /*euclidean_norm=*/true),
            std::move(g)};
}

struct DoubledTable {
    StructureTable table;
    Involution conjugation;
};

// Doubling on pairs (a,b) with product
//   (a,b)(c,d) = (a c + gamma * conj(d) b,  d a + b conj(c))
// and conjugation (a,b) -> (conj(a), -b). Basis order: (x,0) for every x,
// then (0,x); names are 1, e1, e2, ... in that order. gamma = -1 doubles
// R into C, C into H and H into O.
inline DoubledTable cayley_dickson_double(const StructureTable& t, const Involution& inv,
                                          const Rational& gamma) {
    if (inv.dim() != t.dim())
        throw std::invalid_argument("cayley_dickson_double: involution size mismatch");
    const int d = t.dim();
    const int nd = 2 * d;

    std::vector<Cell> cells(static_cast<std::size_t>(nd) * nd);
    auto transfer = [](const Cell& c, const Rational& scale, int offset) {
        Cell out;
        for (const Term& term : c) {
            Rational q = term.coeff * scale;
            if (!q.is_zero()) out.push_back({q, term.index + offset});
        }
        return out;
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            const Rational cy(inv.signs[static_cast<std::size_t>(y)]);
            // (x,0)(y,0) = (x y, 0)
            cells[static_cast<std::size_t>(x) * nd + y] = transfer(t.cell(x, y), Rational(1), 0);
            // (x,0)(0,y) = (0, y x)
            cells[static_cast<std::size_t>(x) * nd + (d + y)] =
                transfer(t.cell(y, x), Rational(1), d);
            // (0,x)(y,0) = (0, x conj(y))
            cells[(static_cast<std::size_t>(d) + x) * nd + y] = transfer(t.cell(x, y), cy, d);
            // (0,x)(0,y) = (gamma conj(y) x, 0)
            cells[(static_cast<std::size_t>(d) + x) * nd + (d + y)] =
                transfer(t.cell(y, x), gamma * cy, 0);
        }

    std::vector<std::string> names(static_cast<std::size_t>(nd));
    names[0] = "1";
    for (int k = 1; k < nd; ++k) names[static_cast<std::size_t>(k)] = "e" + std::to_string(k);

    std::vector<int> signs(static_cast<std::size_t>(nd), -1);
    for (int x = 0; x < d; ++x) signs[static_cast<std::size_t>(x)] = inv.signs[static_cast<std::size_t>(x)];

    const bool norm = t.euclidean_norm_supported() && gamma == Rational(-1);
    return {StructureTable(std::move(names), std::move(cells), norm),
            Involution::from(std::move(signs))};
}

// Octonions as the double of the quaternions with gamma = -1, basis
// 1, e1..e7 in doubling order: e1=(i,0), e2=(j,0), e3=(k,0), e4=(0,1),
// e5=(0,i), e6=(0,j), e7=(0,k).
inline StructureTable build_octonions() {
    QuaternionBuild h = build_quaternions();
    return cayley_dickson_double(h.table, standard_conjugation(h.table), Rational(-1)).table;
}

// Commutative group algebra of (Z/2)^n: index = subset mask, products
// multiply by xor with coefficient +1 throughout.
inline StructureTable build_group_algebra_z2(int n) {
    if (n < 1 || n > 8) throw std::length_error("build_group_algebra_z2: n must be in 1..8");
    const int dim = 1 << n;
    std::vector<std::string> names;
    for (int m = 0; m < dim; ++m) {
        auto w = detail::word_of_mask(static_cast<unsigned>(m), n);
        if (w.empty()) {
            names.push_back("1");
        } else {
            std::string s = "g[";
            for (std::size_t t = 0; t < w.size(); ++t) {
                if (t) s += ',';
                s += std::to_string(w[t]);
            }
            names.push_back(s + "]");
        }
    }
    std::vector<Cell> cells(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            cells[static_cast<std::size_t>(i) * dim + j] = {{Rational(1), i ^ j}};
    return StructureTable(std::move(names), std::move(cells));
}

}  // namespace gca
