#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace gca {

// Element of (Z/2)^n: the degree of a homogeneous element. Bits live in a
// single machine word, so the width is capped at 64 (everything built here
// needs at most 8). Component t is bit t.
class GradeVec {
public:
    static constexpr int max_width = 64;

    explicit GradeVec(int width) : width_(width) {
        if (width < 1 || width > max_width)
            throw std::invalid_argument("GradeVec: width must be in 1..64");
    }

    static GradeVec of(std::initializer_list<int> bits) {
        GradeVec v(static_cast<int>(bits.size()));
        int t = 0;
        for (int b : bits) v.set_bit(t++, b);
        return v;
    }

    // Maps 0..2^width-1 onto vectors so that ascending values enumerate
    // vectors in lexicographic component order.
    static GradeVec from_value(int width, std::uint64_t value) {
        GradeVec v(width);
        for (int t = 0; t < width; ++t)
            v.set_bit(t, static_cast<int>((value >> (width - 1 - t)) & 1u));
        return v;
    }

    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (int t = 0; t < width_; ++t)
            v = (v << 1) | static_cast<std::uint64_t>(bit(t));
        return v;
    }

    int width() const { return width_; }
    int bit(int t) const {
        check_index_(t);
        return static_cast<int>((bits_ >> t) & 1u);
    }
    GradeVec& set_bit(int t, int v) {
        check_index_(t);
        if (v != 0 && v != 1) throw std::invalid_argument("GradeVec: bit must be 0 or 1");
        if (v)
            bits_ |= (std::uint64_t{1} << t);
        else
            bits_ &= ~(std::uint64_t{1} << t);
        return *this;
    }
    bool is_zero() const { return bits_ == 0; }
    int weight() const { return std::popcount(bits_); }

    friend bool operator==(const GradeVec&, const GradeVec&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (int t = 0; t < width_; ++t) {
            if (t) s += ',';
            s += static_cast<char>('0' + bit(t));
        }
        s += ')';
        return s;
    }

    friend GradeVec add(const GradeVec& a, const GradeVec& b) {
        check_same_width_(a, b);
        GradeVec r(a.width_);
        r.bits_ = a.bits_ ^ b.bits_;
        return r;
    }

    // The mod-2 scalar product controlling the commutation sign.
    friend int parity(const GradeVec& a, const GradeVec& b) {
        check_same_width_(a, b);
        return std::popcount(a.bits_ & b.bits_) & 1;
    }

private:
    void check_index_(int t) const {
        if (t < 0 || t >= width_)
            throw std::out_of_range("GradeVec: component index out of range");
    }
    static void check_same_width_(const GradeVec& a, const GradeVec& b) {
        if (a.width_ != b.width_)
            throw std::invalid_argument("GradeVec: width mismatch");
    }

    std::uint64_t bits_ = 0;
    int width_ = 1;
};

}  // namespace gca
