#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gca/builders.hpp"
#include "gca/cell.hpp"
#include "gca/grading.hpp"

namespace gca {

// Lie algebra by structure constants: bracket(i,j) expands [basis_i, basis_j].
// Both triangles are stored; construction from an upper triangle fills the
// lower one antisymmetrically.
struct LieStructure {
    int dim = 0;
    std::vector<std::string> names;
    std::vector<Cell> brackets;  // dim*dim, row-major

    const Cell& bracket(int i, int j) const {
        return brackets[static_cast<std::size_t>(i) * dim + j];
    }
    friend bool operator==(const LieStructure&, const LieStructure&) = default;
};

inline LieStructure make_lie_structure(std::vector<std::string> names,
                                       const std::vector<std::tuple<int, int, Cell>>& upper) {
    LieStructure s;
    s.dim = static_cast<int>(names.size());
    if (s.dim < 1) throw std::invalid_argument("LieStructure: empty basis");
    s.names = std::move(names);
    s.brackets.assign(static_cast<std::size_t>(s.dim) * s.dim, {});
    for (const auto& [i, j, c] : upper) {
        if (i < 0 || j < 0 || i >= s.dim || j >= s.dim || i >= j)
            throw std::invalid_argument("LieStructure: bracket entries must have i < j in range");
        Cell cc = c;
        canonicalize(cc);
        for (const Term& t : cc)
            if (t.index < 0 || t.index >= s.dim)
                throw std::invalid_argument("LieStructure: bracket term index out of range");
        if (!s.brackets[static_cast<std::size_t>(i) * s.dim + j].empty())
            throw std::invalid_argument("LieStructure: duplicate bracket entry");
        s.brackets[static_cast<std::size_t>(i) * s.dim + j] = cc;
        s.brackets[static_cast<std::size_t>(j) * s.dim + i] = cell_neg(std::move(cc));
    }
    return s;
}

// [basis_i, c] expanded through the table.
inline Cell ad_cell(const LieStructure& s, int i, const Cell& c) {
    Cell out;
    for (const Term& t : c) out = cell_sum(out, cell_scaled(s.bracket(i, t.index), t.coeff));
    return out;
}

struct LieViolation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind{};
    int i = 0, j = 0, k = 0;
};

// Checks antisymmetry on all pairs and the Jacobi identity on all triples.
inline std::optional<LieViolation> validate_lie(const LieStructure& s) {
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            if (!(s.bracket(i, j) == cell_neg(s.bracket(j, i))))
                return LieViolation{LieViolation::Kind::Antisymmetry, i, j, 0};
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            for (int k = 0; k < s.dim; ++k) {
                Cell sum = cell_sum(cell_sum(ad_cell(s, i, s.bracket(j, k)),
                                             ad_cell(s, j, s.bracket(k, i))),
                                    ad_cell(s, k, s.bracket(i, j)));
                if (!sum.empty()) return LieViolation{LieViolation::Kind::Jacobi, i, j, k};
            }
    return std::nullopt;
}

inline LieStructure sl2() {
    return make_lie_structure({"h", "e", "f"}, {
                                                   {0, 1, Cell{{Rational(2), 1}}},
                                                   {0, 2, Cell{{Rational(-2), 2}}},
                                                   {1, 2, Cell{{Rational(1), 0}}},
                                               });
}

inline LieStructure so3() {
    return make_lie_structure({"x", "y", "z"}, {
                                                   {0, 1, Cell{{Rational(1), 2}}},
                                                   {0, 2, Cell{{Rational(-1), 1}}},
                                                   {1, 2, Cell{{Rational(1), 0}}},
                                               });
}

struct GradedLieStructure {
    LieStructure lie;
    Grading grading;
};

// Tensor with the quaternions: basis p (x) v for p in {1,i,j,k} (index
// q*dim + x), bracket [p (x) u, q (x) v] = (p q) (x) [u, v], degree of
// p (x) v equal to the degree of p.
inline GradedLieStructure quaternionize(const LieStructure& s) {
    if (auto v = validate_lie(s))
        throw std::invalid_argument(
            v->kind == LieViolation::Kind::Antisymmetry
                ? "quaternionize: input violates antisymmetry"
                : "quaternionize: input violates the Jacobi identity");
    const QuaternionBuild h = build_quaternions();
    const int d = s.dim;
    const int nd = 4 * d;

    GradedLieStructure out;
    out.lie.dim = nd;
    out.lie.names.resize(static_cast<std::size_t>(nd));
    for (int q = 0; q < 4; ++q)
        for (int x = 0; x < d; ++x)
            out.lie.names[static_cast<std::size_t>(q) * d + x] =
                h.table.name(q) + "*" + s.names[static_cast<std::size_t>(x)];

    out.lie.brackets.assign(static_cast<std::size_t>(nd) * nd, {});
    for (int q1 = 0; q1 < 4; ++q1)
        for (int x1 = 0; x1 < d; ++x1)
            for (int q2 = 0; q2 < 4; ++q2)
                for (int x2 = 0; x2 < d; ++x2) {
                    const Term& prod = h.table.cell(q1, q2)[0];
                    Cell c;
                    for (const Term& t : s.bracket(x1, x2))
                        c.push_back({prod.coeff * t.coeff, prod.index * d + t.index});
                    canonicalize(c);
                    out.lie.brackets[(static_cast<std::size_t>(q1) * d + x1) * nd +
                                     (static_cast<std::size_t>(q2) * d + x2)] = std::move(c);
                }

    out.grading.width = h.grading.width;
    out.grading.grades.assign(static_cast<std::size_t>(nd), GradeVec(h.grading.width));
    for (int q = 0; q < 4; ++q)
        for (int x = 0; x < d; ++x)
            out.grading.grades[static_cast<std::size_t>(q) * d + x] =
                h.grading.grades[static_cast<std::size_t>(q)];
    return out;
}

// [u,v] = -(-1)^<deg u, deg v> [v,u] on all basis pairs.
inline std::optional<std::array<int, 2>> check_graded_antisymmetry(const GradedLieStructure& gs) {
    const auto& gr = gs.grading.grades;
    for (int i = 0; i < gs.lie.dim; ++i)
        for (int j = 0; j < gs.lie.dim; ++j) {
            const int sign = parity(gr[static_cast<std::size_t>(i)],
                                    gr[static_cast<std::size_t>(j)])
                                 ? +1
                                 : -1;
            if (!(gs.lie.bracket(i, j) == cell_scaled(gs.lie.bracket(j, i), Rational(sign))))
                return std::array<int, 2>{i, j};
        }
    return std::nullopt;
}

// Cyclic Jacobi identity with the parity signs:
//   (-1)^<a,c> [a,[b,c]] + (-1)^<b,a> [b,[c,a]] + (-1)^<c,b> [c,[a,b]] = 0.
inline std::optional<std::array<int, 3>> check_graded_jacobi(const GradedLieStructure& gs) {
    const auto& s = gs.lie;
    const auto& gr = gs.grading.grades;
    for (int a = 0; a < s.dim; ++a)
        for (int b = 0; b < s.dim; ++b)
            for (int c = 0; c < s.dim; ++c) {
                const Rational s1(parity(gr[static_cast<std::size_t>(a)],
                                         gr[static_cast<std::size_t>(c)])
                                      ? -1
                                      : 1);
                const Rational s2(parity(gr[static_cast<std::size_t>(b)],
                                         gr[static_cast<std::size_t>(a)])
                                      ? -1
                                      : 1);
                const Rational s3(parity(gr[static_cast<std::size_t>(c)],
                                         gr[static_cast<std::size_t>(b)])
                                      ? -1
                                      : 1);
                Cell sum = cell_sum(
                    cell_sum(cell_scaled(ad_cell(s, a, s.bracket(b, c)), s1),
                             cell_scaled(ad_cell(s, b, s.bracket(c, a)), s2)),
                    cell_scaled(ad_cell(s, c, s.bracket(a, b)), s3));
                if (!sum.empty()) return std::array<int, 3>{a, b, c};
            }
    return std::nullopt;
}

// Degree of a nonzero bracket is the sum of the degrees.
inline std::optional<std::array<int, 2>> check_bracket_grading(const GradedLieStructure& gs) {
    const auto& gr = gs.grading.grades;
    for (int i = 0; i < gs.lie.dim; ++i)
        for (int j = 0; j < gs.lie.dim; ++j) {
            const GradeVec want = add(gr[static_cast<std::size_t>(i)],
                                      gr[static_cast<std::size_t>(j)]);
            for (const Term& t : gs.lie.bracket(i, j))
                if (!(gr[static_cast<std::size_t>(t.index)] == want))
                    return std::array<int, 2>{i, j};
        }
    return std::nullopt;
}

using RationalVec = std::vector<Rational>;

inline RationalVec bracket_basis_vec(const LieStructure& s, int i, const RationalVec& v) {
    RationalVec out(static_cast<std::size_t>(s.dim), Rational(0));
    for (int j = 0; j < s.dim; ++j) {
        if (v[static_cast<std::size_t>(j)].is_zero()) continue;
        for (const Term& t : s.bracket(i, j))
            out[static_cast<std::size_t>(t.index)] += v[static_cast<std::size_t>(j)] * t.coeff;
    }
    return out;
}

// Row space in reduced echelon form over Q; rows are pivot-normalized and
// fully back-eliminated, so the stored basis is canonical.
class RationalEchelon {
public:
    explicit RationalEchelon(int dim) : dim_(dim) {}

    RationalVec reduce(RationalVec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = v[static_cast<std::size_t>(pivots_[r])];
            if (c.is_zero()) continue;
            for (int t = 0; t < dim_; ++t)
                v[static_cast<std::size_t>(t)] -= c * rows_[r][static_cast<std::size_t>(t)];
        }
        return v;
    }

    bool insert(RationalVec v) {
        v = reduce(std::move(v));
        int pivot = -1;
        for (int t = 0; t < dim_; ++t)
            if (!v[static_cast<std::size_t>(t)].is_zero()) {
                pivot = t;
                break;
            }
        if (pivot < 0) return false;
        const Rational lead = v[static_cast<std::size_t>(pivot)];
        for (int t = 0; t < dim_; ++t) v[static_cast<std::size_t>(t)] /= lead;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = rows_[r][static_cast<std::size_t>(pivot)];
            if (c.is_zero()) continue;
            for (int t = 0; t < dim_; ++t)
                rows_[r][static_cast<std::size_t>(t)] -= c * v[static_cast<std::size_t>(t)];
        }
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < pivot) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
        return true;
    }

    int dim_span() const { return static_cast<int>(rows_.size()); }
    const std::vector<RationalVec>& basis() const { return rows_; }

private:
    int dim_;
    std::vector<RationalVec> rows_;
    std::vector<int> pivots_;
};

// Smallest subspace containing the seed and closed under bracketing with
// every basis element, by iterated exact rank extension.
inline std::vector<RationalVec> ideal_closure(const GradedLieStructure& gs,
                                              const RationalVec& seed) {
    const int d = gs.lie.dim;
    if (static_cast<int>(seed.size()) != d)
        throw std::invalid_argument("ideal_closure: seed dimension mismatch");
    bool nonzero = false;
    for (const Rational& c : seed) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw std::domain_error("ideal_closure: zero seed");

    RationalEchelon ech(d);
    std::vector<RationalVec> work;
    ech.insert(seed);
    work.push_back(seed);
    while (!work.empty()) {
        const RationalVec v = std::move(work.back());
        work.pop_back();
        for (int i = 0; i < d; ++i) {
            RationalVec w = bracket_basis_vec(gs.lie, i, v);
            if (ech.insert(w)) work.push_back(std::move(w));
        }
    }
    return ech.basis();
}

// Null space basis of a rows x cols rational matrix, free variables set
// to 1 one at a time.
inline std::vector<RationalVec> rational_null_space(std::vector<RationalVec> m, int cols) {
    const int rows = static_cast<int>(m.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(rank)]);
        const Rational lead = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        for (int t = 0; t < cols; ++t) m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(t)] /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int t = 0; t < cols; ++t)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(t)];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<RationalVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
        RationalVec v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(f)] = Rational(1);
        for (int r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
                -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact null space of the adjoint action.
inline std::vector<RationalVec> center(const GradedLieStructure& gs) {
    const int d = gs.lie.dim;
    std::vector<RationalVec> m;
    m.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            RationalVec row(static_cast<std::size_t>(d), Rational(0));
            for (int j = 0; j < d; ++j)
                for (const Term& t : gs.lie.bracket(i, j))
                    if (t.index == k) row[static_cast<std::size_t>(j)] += t.coeff;
            m.push_back(std::move(row));
        }
    return rational_null_space(std::move(m), d);
}

}  // namespace gca
