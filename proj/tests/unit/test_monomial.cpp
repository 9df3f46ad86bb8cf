#include <catch2/catch_amalgamated.hpp>

#include "gca/monomial.hpp"
#include "gca/verify.hpp"

using gca::GradeVec;
using gca::SignedMonomial;
using gca::SquareConvention;

namespace {
const SquareConvention kPlus3 = SquareConvention::plus_ones(3);
}

TEST_CASE("worked triplet products") {
    const SignedMonomial e1 = SignedMonomial::make(3, {1});
    const SignedMonomial e2 = SignedMonomial::make(3, {2});

    // a generator squares to the unit
    CHECK(mono_mul(e1, e1, kPlus3) == SignedMonomial::unit(3));
    // exchanging e2 past e1 costs the sign
    CHECK(mono_mul(e2, e1, kPlus3) == SignedMonomial::make(3, {1, 2}, -1));
    CHECK(mono_mul(e1, e2, kPlus3) == SignedMonomial::make(3, {1, 2}, +1));

    // i * j = k: an even number of exchanges
    const SignedMonomial i = SignedMonomial::make(3, {2, 3});
    const SignedMonomial j = SignedMonomial::make(3, {1, 3});
    CHECK(mono_mul(i, j, kPlus3) == SignedMonomial::make(3, {1, 2}, +1));
    // j * i = -k: an odd number of exchanges
    CHECK(mono_mul(j, i, kPlus3) == SignedMonomial::make(3, {1, 2}, -1));
}

TEST_CASE("negative squares") {
    const SquareConvention minus2 = SquareConvention::from({-1, -1});
    const SignedMonomial e1 = SignedMonomial::make(2, {1});
    CHECK(mono_mul(e1, e1, minus2) == SignedMonomial::make(2, {}, -1));
}

TEST_CASE("degree of a word") {
    CHECK(grade_of(SignedMonomial::unit(3)) == GradeVec::of({0, 0, 0}));
    CHECK(grade_of(SignedMonomial::make(3, {2, 3})) == GradeVec::of({0, 1, 1}));
    CHECK(grade_of(SignedMonomial::make(3, {1, 2})) == GradeVec::of({1, 1, 0}));
}

TEST_CASE("swap sign") {
    const SignedMonomial i = SignedMonomial::make(3, {2, 3});
    const SignedMonomial j = SignedMonomial::make(3, {1, 3});
    CHECK(mono_sign_of_swap(i, j) == 1);
    CHECK(mono_sign_of_swap(i, i) == 0);
    CHECK(mono_sign_of_swap(SignedMonomial::unit(3), j) == 0);
}

TEST_CASE("swap contract holds exhaustively for n<=4") {
    for (int n = 1; n <= 4; ++n) {
        const SquareConvention conv = SquareConvention::plus_ones(n);
        for (unsigned am = 0; am < (1u << n); ++am)
            for (unsigned bm = 0; bm < (1u << n); ++bm) {
                const SignedMonomial a = gca::monomial_from_mask(n, am);
                const SignedMonomial b = gca::monomial_from_mask(n, bm);
                SignedMonomial ba = mono_mul(b, a, conv);
                if (mono_sign_of_swap(a, b)) ba.sign = -ba.sign;
                CHECK(mono_mul(a, b, conv) == ba);
                // on even-degree pairs the plain degree parity is the swap sign
                const GradeVec ga = grade_of(a), gb = grade_of(b);
                if ((ga.weight() * gb.weight()) % 2 == 0)
                    CHECK(mono_sign_of_swap(a, b) == parity(ga, gb));
            }
    }
}

TEST_CASE("degree is additive under products, exhaustive n<=4") {
    for (int n = 1; n <= 4; ++n) {
        const SquareConvention conv = SquareConvention::plus_ones(n);
        for (unsigned am = 0; am < (1u << n); ++am)
            for (unsigned bm = 0; bm < (1u << n); ++bm) {
                const SignedMonomial a = gca::monomial_from_mask(n, am);
                const SignedMonomial b = gca::monomial_from_mask(n, bm);
                CHECK(grade_of(mono_mul(a, b, conv)) == add(grade_of(a), grade_of(b)));
            }
    }
}

TEST_CASE("associativity, exhaustive n<=3") {
    for (int n = 1; n <= 3; ++n) {
        const SquareConvention conv = SquareConvention::plus_ones(n);
        for (unsigned am = 0; am < (1u << n); ++am)
            for (unsigned bm = 0; bm < (1u << n); ++bm)
                for (unsigned cm = 0; cm < (1u << n); ++cm) {
                    const SignedMonomial a = gca::monomial_from_mask(n, am);
                    const SignedMonomial b = gca::monomial_from_mask(n, bm);
                    const SignedMonomial c = gca::monomial_from_mask(n, cm);
                    CHECK(mono_mul(mono_mul(a, b, conv), c, conv) ==
                          mono_mul(a, mono_mul(b, c, conv), conv));
                }
    }
}

TEST_CASE("transposition counting agrees with the crossing formula") {
    for (int n = 1; n <= 4; ++n) {
        const SquareConvention conv = SquareConvention::plus_ones(n);
        for (unsigned am = 0; am < (1u << n); ++am)
            for (unsigned bm = 0; bm < (1u << n); ++bm)
                for (int sa : {+1, -1}) {
                    const SignedMonomial a = gca::monomial_from_mask(n, am, sa);
                    const SignedMonomial b = gca::monomial_from_mask(n, bm);
                    CHECK(mono_mul(a, b, conv) == gca::mono_mul_by_crossings(a, b, conv));
                }
    }
}

TEST_CASE("monomial text forms") {
    CHECK(gca::to_string(SignedMonomial::make(3, {2, 3})) == "+e[2,3]");
    CHECK(gca::to_string(SignedMonomial::make(3, {1, 2}, -1)) == "-e[1,2]");
    CHECK(gca::to_string(SignedMonomial::unit(3)) == "+1");
}

TEST_CASE("monomial validation") {
    CHECK_THROWS_AS(SignedMonomial::make(3, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMonomial::make(3, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMonomial::make(3, {4}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMonomial::make(3, {1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(
        mono_mul(SignedMonomial::unit(2), SignedMonomial::unit(3), SquareConvention::plus_ones(2)),
        std::invalid_argument);
}
