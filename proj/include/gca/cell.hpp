#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

// One summand of a sparse basis combination.
struct Term {
    Rational coeff;
    int index = 0;
    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse vector over a basis, canonical form: indices strictly increasing,
// no zero coefficients. The empty cell is the zero vector.
using Cell = std::vector<Term>;

inline void canonicalize(Cell& c) {
    std::sort(c.begin(), c.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    Cell out;
    for (const Term& t : c) {
        if (!out.empty() && out.back().index == t.index)
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    c = std::move(out);
}

inline bool cell_is_canonical(const Cell& c) {
    for (std::size_t t = 0; t < c.size(); ++t) {
        if (c[t].coeff.is_zero()) return false;
        if (t > 0 && c[t - 1].index >= c[t].index) return false;
    }
    return true;
}

inline Cell cell_scaled(Cell c, const Rational& s) {
    if (s.is_zero()) return {};
    for (Term& t : c) t.coeff *= s;
    return c;
}

inline Cell cell_neg(Cell c) {
    for (Term& t : c) t.coeff = -t.coeff;
    return c;
}

inline Cell cell_sum(const Cell& a, const Cell& b) {
    Cell out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back(b[j++]);
        } else {
            Rational s = a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({s, a[i].index});
            ++i;
            ++j;
        }
    }
    return out;
}

inline std::string cell_to_string(const Cell& c, const std::vector<std::string>& names) {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t t = 0; t < c.size(); ++t) {
        Rational q = c[t].coeff;
        if (t == 0) {
            if (q < Rational(0)) {
                s += '-';
                q = -q;
            }
        } else {
            s += q < Rational(0) ? " - " : " + ";
            if (q < Rational(0)) q = -q;
        }
        const std::string& name = names[static_cast<std::size_t>(c[t].index)];
        if (q == Rational(1))
            s += name;
        else if (name == "1")
            s += q.to_string();
        else
            s += q.to_string() + "*" + name;
    }
    return s;
}

}  // namespace gca
