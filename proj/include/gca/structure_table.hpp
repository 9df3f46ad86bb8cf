#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gca/cell.hpp"
#include "gca/grading.hpp"

namespace gca {

// Finite-dimensional algebra given by its basis names and structure
// constants: cell(i,j) is the expansion of basis_i * basis_j. Index 0 is
// the two-sided unit; the constructor enforces that and the canonical
// sparse form of every cell.
class StructureTable {
public:
    StructureTable(std::vector<std::string> names, std::vector<Cell> cells,
                   bool euclidean_norm = false)
        : dim_(static_cast<int>(names.size())),
          names_(std::move(names)),
          cells_(std::move(cells)),
          euclidean_norm_(euclidean_norm) {
        if (dim_ < 1) throw std::invalid_argument("StructureTable: empty basis");
        if (cells_.size() != static_cast<std::size_t>(dim_) * dim_)
            throw std::invalid_argument("StructureTable: cell grid is not dim x dim");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const Cell& c = cell(i, j);
                if (!cell_is_canonical(c))
                    throw std::invalid_argument("StructureTable: cell (" + std::to_string(i) +
                                                "," + std::to_string(j) + ") not canonical");
                for (const Term& t : c)
                    if (t.index < 0 || t.index >= dim_)
                        throw std::invalid_argument("StructureTable: cell index out of range");
            }
        for (int j = 0; j < dim_; ++j) {
            if (cell(0, j) != Cell{{Rational(1), j}} || cell(j, 0) != Cell{{Rational(1), j}})
                throw std::invalid_argument("StructureTable: index 0 is not a two-sided unit");
        }
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const Cell& cell(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * dim_ + j];
    }
    bool euclidean_norm_supported() const { return euclidean_norm_; }

    friend bool operator==(const StructureTable& a, const StructureTable& b) {
        return a.names_ == b.names_ && a.cells_ == b.cells_;
    }

private:
    int dim_;
    std::vector<std::string> names_;
    std::vector<Cell> cells_;
    bool euclidean_norm_;
};

// Sparse element of a structure-table algebra. Holds a pointer to its
// table; mixing elements of different table objects is a domain error.
class Element {
public:
    explicit Element(const StructureTable& t) : table_(&t) {}

    static Element basis(const StructureTable& t, int i) {
        Element e(t);
        e.set_coeff(i, Rational(1));
        return e;
    }
    static Element scalar(const StructureTable& t, const Rational& c) {
        Element e(t);
        e.set_coeff(0, c);
        return e;
    }

    const StructureTable& table() const { return *table_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    Element& set_coeff(int i, const Rational& c) {
        if (i < 0 || i >= table_->dim())
            throw std::out_of_range("Element: basis index out of range");
        if (c.is_zero())
            coeffs_.erase(i);
        else
            coeffs_[i] = c;
        return *this;
    }
    bool is_zero() const { return coeffs_.empty(); }

    friend Element operator+(const Element& x, const Element& y) {
        check_same_table(x, y);
        Element r = x;
        for (const auto& [i, c] : y.coeffs_) r.set_coeff(i, r.coeff(i) + c);
        return r;
    }
    friend Element operator-(const Element& x, const Element& y) {
        check_same_table(x, y);
        Element r = x;
        for (const auto& [i, c] : y.coeffs_) r.set_coeff(i, r.coeff(i) - c);
        return r;
    }
    friend Element operator*(const Rational& s, const Element& x) {
        Element r(*x.table_);
        for (const auto& [i, c] : x.coeffs_) r.set_coeff(i, s * c);
        return r;
    }
    friend Element operator-(const Element& x) { return Rational(-1) * x; }
    friend bool operator==(const Element& x, const Element& y) {
        return x.table_ == y.table_ && x.coeffs_ == y.coeffs_;
    }

    std::string to_string() const {
        Cell c;
        for (const auto& [i, q] : coeffs_) c.push_back({q, i});
        return cell_to_string(c, table_->names());
    }

    static void check_same_table(const Element& x, const Element& y) {
        if (x.table_ != y.table_)
            throw std::domain_error("elements belong to different tables");
    }

private:
    const StructureTable* table_;
    std::map<int, Rational> coeffs_;
};

// Bilinear extension of the structure table.
inline Element elem_mul(const Element& x, const Element& y) {
    Element::check_same_table(x, y);
    Element r(x.table());
    for (const auto& [i, ci] : x.coeffs())
        for (const auto& [j, cj] : y.coeffs())
            for (const Term& t : x.table().cell(i, j))
                r.set_coeff(t.index, r.coeff(t.index) + ci * cj * t.coeff);
    return r;
}

inline Element operator*(const Element& x, const Element& y) { return elem_mul(x, y); }

// Sum of squared coefficients: the Euclidean norm form on the standard
// basis of the built composition algebras.
inline Rational norm_squared(const Element& x) {
    if (!x.table().euclidean_norm_supported())
        throw std::domain_error("norm_squared: table has no designated Euclidean norm");
    Rational n(0);
    for (const auto& [i, c] : x.coeffs()) n += c * c;
    return n;
}

enum class Commutation { Commute, Anticommute, Neither };

inline Commutation commutation_relation(const StructureTable& t, int i, int j) {
    const Cell& ij = t.cell(i, j);
    const Cell& ji = t.cell(j, i);
    if (ij == ji) return Commutation::Commute;
    if (ij == cell_neg(ji)) return Commutation::Anticommute;
    return Commutation::Neither;
}

struct GradedCommViolation {
    enum class Kind { CommutationSign, ProductGrade };
    Kind kind{};
    int i = 0;
    int j = 0;
    int expected_sign = 0;  // +1 or -1 for CommutationSign
    int found_sign = 0;     // +1, -1, or 0 when the cells match neither sign
    std::string detail;
};

// Verifies both the sign condition (cell(i,j) == +/- cell(j,i) with the
// sign prescribed by the degree parity) and homogeneity of every nonzero
// product (each term of cell(i,j) must carry degree grade(i)+grade(j)).
// Scans pairs row-major and reports the first violation.
inline std::optional<GradedCommViolation> check_graded_commutative(const StructureTable& t,
                                                                   const Grading& g) {
    check_grading_shape(g, t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            const Cell& ij = t.cell(i, j);
            const Cell& ji = t.cell(j, i);
            const int expected = parity(g.grades[i], g.grades[j]) ? -1 : +1;
            if (!(ij.empty() && ji.empty())) {
                const bool eq = ij == ji;
                const bool neg = ij == cell_neg(ji);
                if (!(expected == +1 ? eq : neg)) {
                    GradedCommViolation v;
                    v.kind = GradedCommViolation::Kind::CommutationSign;
                    v.i = i;
                    v.j = j;
                    v.expected_sign = expected;
                    v.found_sign = eq ? +1 : (neg ? -1 : 0);
                    v.detail = t.name(i) + "*" + t.name(j) + " = " +
                               cell_to_string(ij, t.names()) + " but " + t.name(j) + "*" +
                               t.name(i) + " = " + cell_to_string(ji, t.names());
                    return v;
                }
            }
            const GradeVec want = add(g.grades[i], g.grades[j]);
            for (const Term& term : ij)
                if (!(g.grades[static_cast<std::size_t>(term.index)] == want)) {
                    GradedCommViolation v;
                    v.kind = GradedCommViolation::Kind::ProductGrade;
                    v.i = i;
                    v.j = j;
                    v.detail = "degree of " + t.name(term.index) + " in " + t.name(i) + "*" +
                               t.name(j) + " is " +
                               g.grades[static_cast<std::size_t>(term.index)].to_string() +
                               ", expected " + want.to_string();
                    return v;
                }
        }
    return std::nullopt;
}

}  // namespace gca
