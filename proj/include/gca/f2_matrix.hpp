#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gca {

// Dense bit matrix over F2, rows packed into 64-bit words. Sized for the
// small systems the grading solver produces (tens of unknowns).
class F2Matrix {
public:
    F2Matrix(int rows, int cols)
        : rows_(rows),
          cols_(cols),
          words_(cols == 0 ? 1 : (cols + 63) / 64),
          data_(static_cast<std::size_t>(rows) * words_, 0) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("F2Matrix: negative shape");
    }

    static F2Matrix identity(int n) {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int get(int i, int j) const {
        check_(i, j);
        return static_cast<int>((data_[word_(i, j)] >> (j & 63)) & 1u);
    }
    void set(int i, int j, int v) {
        check_(i, j);
        if (v)
            data_[word_(i, j)] |= (std::uint64_t{1} << (j & 63));
        else
            data_[word_(i, j)] &= ~(std::uint64_t{1} << (j & 63));
    }
    void flip(int i, int j) { set(i, j, get(i, j) ^ 1); }

    void xor_rows(int dst, int src) {
        for (int w = 0; w < words_; ++w)
            data_[static_cast<std::size_t>(dst) * words_ + w] ^=
                data_[static_cast<std::size_t>(src) * words_ + w];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int w = 0; w < words_; ++w)
            std::swap(data_[static_cast<std::size_t>(a) * words_ + w],
                      data_[static_cast<std::size_t>(b) * words_ + w]);
    }
    bool row_is_zero(int i) const {
        for (int w = 0; w < words_; ++w)
            if (data_[static_cast<std::size_t>(i) * words_ + w] != 0) return false;
        return true;
    }

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    void check_(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("F2Matrix: index out of range");
    }
    std::size_t word_(int i, int j) const {
        return static_cast<std::size_t>(i) * words_ + (j >> 6);
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    F2Matrix matrix;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row-echelon form with deterministic pivoting: lowest column
// index first, first available row.
inline RrefResult rref(F2Matrix m) {
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.swap_rows(p, r);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

// Solves a x = rhs over F2. Free variables are fixed to 0, so the output
// is deterministic. Returns std::nullopt when the system is inconsistent.
// Every solution is re-checked by substitution before being returned.
inline std::optional<std::vector<std::uint8_t>> solve_affine(
    const F2Matrix& a, const std::vector<std::uint8_t>& rhs) {
    if (static_cast<int>(rhs.size()) != a.rows())
        throw std::invalid_argument("solve_affine: rhs length != rows");

    F2Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) aug.set(i, j, 1);
        if (rhs[i] & 1) aug.set(i, a.cols(), 1);
    }

    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < a.cols() && r < aug.rows(); ++c) {
        int p = -1;
        for (int i = r; i < aug.rows(); ++i)
            if (aug.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        aug.swap_rows(p, r);
        for (int i = 0; i < aug.rows(); ++i)
            if (i != r && aug.get(i, c)) aug.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < aug.rows(); ++i)
        if (aug.get(i, a.cols())) return std::nullopt;

    std::vector<std::uint8_t> x(a.cols(), 0);
    for (int t = 0; t < r; ++t) x[pivots[t]] = static_cast<std::uint8_t>(aug.get(t, a.cols()));

    for (int i = 0; i < a.rows(); ++i) {
        int acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc ^= a.get(i, j) & x[j];
        if (acc != (rhs[i] & 1))
            throw std::logic_error("solve_affine: substitution check failed");
    }
    return x;
}

}  // namespace gca
