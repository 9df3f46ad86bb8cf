#pragma once

#include <stdexcept>
#include <vector>

#include "gca/f2_matrix.hpp"
#include "gca/grade_vec.hpp"

namespace gca {

// A degree vector for every basis index of an algebra. The unit (index 0)
// carries the zero vector in every grading produced by the builders and
// the solver; gradings read from files are checked, not trusted.
struct Grading {
    int width = 1;
    std::vector<GradeVec> grades;
    friend bool operator==(const Grading&, const Grading&) = default;
};

inline void check_grading_shape(const Grading& g, int dim) {
    if (static_cast<int>(g.grades.size()) != dim)
        throw std::invalid_argument("grading does not assign a degree to every basis index");
    for (const GradeVec& v : g.grades)
        if (v.width() != g.width)
            throw std::invalid_argument("grading width mismatch");
}

// Matrix of pairwise degree parities. Two gradings with equal parity
// matrices produce identical commutation behaviour.
inline F2Matrix parity_matrix_of(const Grading& g) {
    const int k = static_cast<int>(g.grades.size());
    F2Matrix p(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            p.set(i, j, parity(g.grades[i], g.grades[j]));
    return p;
}

}  // namespace gca
