#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gca/f2_matrix.hpp"
#include "gca/grading.hpp"
#include "gca/structure_table.hpp"

namespace gca {

// Raised when the grading question is ill-posed for a table: some basis
// pair neither commutes nor anticommutes, or some product is a multi-term
// combination (degree linearity only constrains single-term products).
class UnsupportedTableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ConstraintTag {
    enum class Family { Diagonal, Pair, Linearity };
    Family family{};
    int i = 0;
    int j = 0;
    int l = -1;  // Linearity only: the index paired against the product (i,j)
    friend bool operator==(const ConstraintTag&, const ConstraintTag&) = default;
};

// Affine F2 system over the unknowns P[i][j] = parity of the degrees of
// basis i and j (i <= j, triangular numbering). Three constraint
// families: P[i][i] = 0, one bit per (anti)commuting pair, and one
// bilinearity row per single-term product relation and partner index.
struct ParityConstraintSystem {
    int k = 0;
    F2Matrix equations{0, 0};
    std::vector<std::uint8_t> rhs;
    std::vector<ConstraintTag> tags;

    int unknown_index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return i * k - i * (i - 1) / 2 + (j - i);
    }
    int num_unknowns() const { return k * (k + 1) / 2; }
};

inline ParityConstraintSystem derive_constraints(const StructureTable& t) {
    ParityConstraintSystem sys;
    sys.k = t.dim();
    const int k = sys.k;

    std::vector<std::vector<int>> rows;
    std::vector<std::uint8_t> rhs;
    std::vector<ConstraintTag> tags;
    auto add_row = [&](std::vector<int> unknowns, int b, ConstraintTag tag) {
        std::sort(unknowns.begin(), unknowns.end());
        std::vector<int> keep;
        for (std::size_t p = 0; p < unknowns.size();) {
            std::size_t q = p;
            while (q < unknowns.size() && unknowns[q] == unknowns[p]) ++q;
            if ((q - p) & 1) keep.push_back(unknowns[p]);
            p = q;
        }
        if (keep.empty() && b == 0) return;
        rows.push_back(std::move(keep));
        rhs.push_back(static_cast<std::uint8_t>(b));
        tags.push_back(tag);
    };

    for (int i = 0; i < k; ++i)
        add_row({sys.unknown_index(i, i)}, 0,
                {ConstraintTag::Family::Diagonal, i, i, -1});

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (t.cell(i, j).empty() && t.cell(j, i).empty()) continue;
            const Commutation rel = commutation_relation(t, i, j);
            if (rel == Commutation::Neither)
                throw UnsupportedTableError("basis elements " + t.name(i) + " and " + t.name(j) +
                                            " neither commute nor anticommute");
            add_row({sys.unknown_index(i, j)}, rel == Commutation::Anticommute ? 1 : 0,
                    {ConstraintTag::Family::Pair, i, j, -1});
        }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Cell& c = t.cell(i, j);
            if (c.empty()) continue;
            if (c.size() > 1)
                throw UnsupportedTableError("product " + t.name(i) + "*" + t.name(j) +
                                            " is not a single basis element");
            const int kp = c[0].index;
            for (int l = 0; l < k; ++l)
                add_row({sys.unknown_index(l, kp), sys.unknown_index(l, i),
                         sys.unknown_index(l, j)},
                        0, {ConstraintTag::Family::Linearity, i, j, l});
        }

    sys.equations = F2Matrix(static_cast<int>(rows.size()), sys.num_unknowns());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int u : rows[r]) sys.equations.set(static_cast<int>(r), u, 1);
    sys.rhs = std::move(rhs);
    sys.tags = std::move(tags);
    return sys;
}

// Indices (l1,l2,l3,l4) with basis_l3 = +/- basis_l1 * basis_l2 while
// basis_l4 anticommutes with all three: degree linearity would force l4
// to commute with l3, so no parity grading can exist.
struct ObstructionWitness {
    int l1 = 0, l2 = 0, l3 = 0, l4 = 0;
    friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

// Scans (l1,l2,l4) lexicographically and returns the first match, so the
// output is deterministic.
inline std::optional<ObstructionWitness> find_obstruction_witness(const StructureTable& t) {
    const int d = t.dim();
    for (int l1 = 0; l1 < d; ++l1)
        for (int l2 = 0; l2 < d; ++l2) {
            if (l2 == l1) continue;
            const Cell& c = t.cell(l1, l2);
            if (c.size() != 1) continue;
            const int l3 = c[0].index;
            for (int l4 = 0; l4 < d; ++l4) {
                if (l4 == l1 || l4 == l2 || l4 == l3) continue;
                if (commutation_relation(t, l4, l1) != Commutation::Anticommute) continue;
                if (commutation_relation(t, l4, l2) != Commutation::Anticommute) continue;
                if (commutation_relation(t, l4, l3) != Commutation::Anticommute) continue;
                return ObstructionWitness{l1, l2, l3, l4};
            }
        }
    return std::nullopt;
}

// When no quadruple witness exists, the inconsistency is still certified:
// a set of constraint rows whose mod-2 sum reads 0 = 1.
struct InfeasibilityCertificate {
    std::vector<ConstraintTag> constraints;
};

struct SolveGradingResult {
    std::optional<Grading> grading;
    std::optional<ObstructionWitness> witness;
    std::optional<InfeasibilityCertificate> certificate;
    bool feasible() const { return grading.has_value(); }
};

// Splits the basis into generators (indices not reachable as single-term
// products of earlier-known indices) and derived entries with their
// defining product. Deterministic: propagation to a fixed point, then the
// smallest unknown index becomes the next generator.
struct GeneratorDecomposition {
    std::vector<int> generators;
    std::vector<std::array<int, 2>> derived_from;  // {-1,-1} for unit and generators
    std::vector<int> order;                        // derivation order, starts at the unit
};

inline GeneratorDecomposition generator_decomposition(const StructureTable& t) {
    const int d = t.dim();
    GeneratorDecomposition dec;
    dec.derived_from.assign(static_cast<std::size_t>(d), {-1, -1});
    std::vector<char> known(static_cast<std::size_t>(d), 0);
    known[0] = 1;
    dec.order.push_back(0);
    int nknown = 1;
    while (nknown < d) {
        for (bool progress = true; progress;) {
            progress = false;
            for (int i = 0; i < d; ++i) {
                if (!known[static_cast<std::size_t>(i)]) continue;
                for (int j = 0; j < d; ++j) {
                    if (!known[static_cast<std::size_t>(j)]) continue;
                    const Cell& c = t.cell(i, j);
                    if (c.size() != 1) continue;
                    const int idx = c[0].index;
                    if (known[static_cast<std::size_t>(idx)]) continue;
                    known[static_cast<std::size_t>(idx)] = 1;
                    ++nknown;
                    dec.derived_from[static_cast<std::size_t>(idx)] = {i, j};
                    dec.order.push_back(idx);
                    progress = true;
                }
            }
        }
        for (int g = 0; g < d && nknown < d; ++g)
            if (!known[static_cast<std::size_t>(g)]) {
                known[static_cast<std::size_t>(g)] = 1;
                ++nknown;
                dec.generators.push_back(g);
                dec.order.push_back(g);
                break;
            }
    }
    return dec;
}

// Brute-force oracle: assigns width-m degree vectors to the generators,
// propagates degrees through single-term products, and keeps the first
// assignment (in lexicographic order) that passes the full graded-
// commutativity check.
inline std::optional<Grading> exhaustive_grading_search(const StructureTable& t, int m) {
    if (m < 1 || m > 4)
        throw std::length_error("exhaustive_grading_search: width must be in 1..4");
    if (t.dim() > 16)
        throw std::length_error("exhaustive_grading_search: table dimension must be <= 16");
    const GeneratorDecomposition dec = generator_decomposition(t);
    const int s = static_cast<int>(dec.generators.size());
    if (m * s > 24)
        throw std::length_error("exhaustive_grading_search: assignment space too large");

    const std::uint64_t per = std::uint64_t{1} << m;
    const std::uint64_t total = std::uint64_t{1} << (m * s);
    std::vector<GradeVec> grades(static_cast<std::size_t>(t.dim()), GradeVec(m));
    for (std::uint64_t asg = 0; asg < total; ++asg) {
        for (int r = 0; r < s; ++r) {
            const std::uint64_t val = (asg >> (m * (s - 1 - r))) & (per - 1);
            grades[static_cast<std::size_t>(dec.generators[static_cast<std::size_t>(r)])] =
                GradeVec::from_value(m, val);
        }
        for (int idx : dec.order) {
            const auto& df = dec.derived_from[static_cast<std::size_t>(idx)];
            if (df[0] >= 0)
                grades[static_cast<std::size_t>(idx)] =
                    add(grades[static_cast<std::size_t>(df[0])],
                        grades[static_cast<std::size_t>(df[1])]);
        }
        Grading g{m, grades};
        if (!check_graded_commutative(t, g)) return g;
    }
    return std::nullopt;
}

namespace detail {

// Realizes a solved parity matrix by explicit vectors: peel hyperbolic
// pairs off the generator Gram form, spending three fresh coordinates per
// pair with the even-weight patterns (0,1,1) / (1,0,1), then propagate
// derived degrees through the product tree. Returns nothing if the
// realized grading fails to reproduce p exactly.
inline std::optional<Grading> realize_parity_matrix(const StructureTable& t, const F2Matrix& p) {
    const GeneratorDecomposition dec = generator_decomposition(t);
    const int s = static_cast<int>(dec.generators.size());

    std::vector<std::vector<std::uint8_t>> q(
        static_cast<std::size_t>(s), std::vector<std::uint8_t>(static_cast<std::size_t>(s), 0));
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<std::uint8_t>(p.get(dec.generators[static_cast<std::size_t>(a)],
                                                dec.generators[static_cast<std::size_t>(b)]));

    std::vector<std::vector<std::uint8_t>> coords(static_cast<std::size_t>(s));
    std::vector<char> alive(static_cast<std::size_t>(s), 1);
    int blocks = 0;
    while (true) {
        int pa = -1, pb = -1;
        for (int a = 0; a < s && pa < 0; ++a) {
            if (!alive[static_cast<std::size_t>(a)]) continue;
            for (int b = a + 1; b < s; ++b)
                if (alive[static_cast<std::size_t>(b)] &&
                    q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                    pa = a;
                    pb = b;
                    break;
                }
        }
        if (pa < 0) break;

        for (int c = 0; c < s; ++c)
            coords[static_cast<std::size_t>(c)].insert(coords[static_cast<std::size_t>(c)].end(),
                                                       {0, 0, 0});
        const std::size_t base = coords[static_cast<std::size_t>(pa)].size() - 3;
        const std::array<std::uint8_t, 3> pat_a{0, 1, 1};
        const std::array<std::uint8_t, 3> pat_b{1, 0, 1};
        auto put = [&](int gen, const std::array<std::uint8_t, 3>& pat) {
            for (std::size_t u = 0; u < 3; ++u)
                coords[static_cast<std::size_t>(gen)][base + u] ^= pat[u];
        };
        put(pa, pat_a);
        put(pb, pat_b);
        for (int c = 0; c < s; ++c) {
            if (!alive[static_cast<std::size_t>(c)] || c == pa || c == pb) continue;
            if (q[static_cast<std::size_t>(c)][static_cast<std::size_t>(pb)]) put(c, pat_a);
            if (q[static_cast<std::size_t>(c)][static_cast<std::size_t>(pa)]) put(c, pat_b);
        }
        const auto qold = q;
        for (int c = 0; c < s; ++c)
            for (int e = 0; e < s; ++e) {
                if (!alive[static_cast<std::size_t>(c)] || !alive[static_cast<std::size_t>(e)])
                    continue;
                if (c == pa || c == pb || e == pa || e == pb) continue;
                q[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)] =
                    qold[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)] ^
                    (qold[static_cast<std::size_t>(c)][static_cast<std::size_t>(pa)] &
                     qold[static_cast<std::size_t>(e)][static_cast<std::size_t>(pb)]) ^
                    (qold[static_cast<std::size_t>(c)][static_cast<std::size_t>(pb)] &
                     qold[static_cast<std::size_t>(e)][static_cast<std::size_t>(pa)]);
            }
        alive[static_cast<std::size_t>(pa)] = alive[static_cast<std::size_t>(pb)] = 0;
        ++blocks;
    }

    const int width = blocks > 0 ? 3 * blocks : 1;
    std::vector<GradeVec> grades(static_cast<std::size_t>(t.dim()), GradeVec(width));
    for (int a = 0; a < s; ++a) {
        GradeVec v(width);
        const auto& cs = coords[static_cast<std::size_t>(a)];
        for (std::size_t u = 0; u < cs.size(); ++u) v.set_bit(static_cast<int>(u), cs[u]);
        grades[static_cast<std::size_t>(dec.generators[static_cast<std::size_t>(a)])] = v;
    }
    for (int idx : dec.order) {
        const auto& df = dec.derived_from[static_cast<std::size_t>(idx)];
        if (df[0] >= 0)
            grades[static_cast<std::size_t>(idx)] = add(
                grades[static_cast<std::size_t>(df[0])], grades[static_cast<std::size_t>(df[1])]);
    }
    Grading g{width, std::move(grades)};
    if (!(parity_matrix_of(g) == p)) return std::nullopt;
    return g;
}

}  // namespace detail

// Decides whether the table admits a (Z/2)^m grading for any m. On
// success the returned grading has been re-verified by the full checker;
// on failure the result carries the first obstruction quadruple, or a raw
// row-combination certificate when no quadruple exists.
inline SolveGradingResult solve_grading(const StructureTable& t) {
    const ParityConstraintSystem sys = derive_constraints(t);
    const int rows = sys.equations.rows();
    const int unknowns = sys.num_unknowns();

    // Eliminate on [A | I | rhs]; the identity block tracks which input
    // rows combine into each reduced row.
    F2Matrix aug(rows, unknowns + rows + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < unknowns; ++j)
            if (sys.equations.get(i, j)) aug.set(i, j, 1);
        aug.set(i, unknowns + i, 1);
        if (sys.rhs[static_cast<std::size_t>(i)] & 1) aug.set(i, unknowns + rows, 1);
    }
    int rank = 0;
    std::vector<int> pivots;
    for (int c = 0; c < unknowns && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (aug.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        aug.swap_rows(p, rank);
        for (int i = 0; i < rows; ++i)
            if (i != rank && aug.get(i, c)) aug.xor_rows(i, rank);
        pivots.push_back(c);
        ++rank;
    }

    for (int i = rank; i < rows; ++i)
        if (aug.get(i, unknowns + rows)) {
            SolveGradingResult res;
            if (auto w = find_obstruction_witness(t)) {
                res.witness = *w;
            } else {
                InfeasibilityCertificate cert;
                for (int r = 0; r < rows; ++r)
                    if (aug.get(i, unknowns + r))
                        cert.constraints.push_back(sys.tags[static_cast<std::size_t>(r)]);
                res.certificate = std::move(cert);
            }
            return res;
        }

    std::vector<std::uint8_t> x(static_cast<std::size_t>(unknowns), 0);
    for (int r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] =
            static_cast<std::uint8_t>(aug.get(r, unknowns + rows));
    for (int i = 0; i < rows; ++i) {
        int acc = 0;
        for (int j = 0; j < unknowns; ++j) acc ^= sys.equations.get(i, j) & x[static_cast<std::size_t>(j)];
        if (acc != (sys.rhs[static_cast<std::size_t>(i)] & 1))
            throw std::logic_error("solve_grading: substitution check failed");
    }

    F2Matrix p(sys.k, sys.k);
    for (int i = 0; i < sys.k; ++i)
        for (int j = i; j < sys.k; ++j) {
            const int v = x[static_cast<std::size_t>(sys.unknown_index(i, j))];
            p.set(i, j, v);
            p.set(j, i, v);
        }

    if (auto g = detail::realize_parity_matrix(t, p))
        if (!check_graded_commutative(t, *g)) return {std::move(g), std::nullopt, std::nullopt};

    if (t.dim() <= 16)
        for (int m = 1; m <= 4; ++m)
            if (auto g = exhaustive_grading_search(t, m))
                return {std::move(g), std::nullopt, std::nullopt};
    throw std::logic_error("solve_grading: consistent parity system but no realization found");
}

}  // namespace gca
