#include <catch2/catch_amalgamated.hpp>

#include "gca/builders.hpp"
#include "gca/verify.hpp"

using gca::Cell;
using gca::Commutation;
using gca::Element;
using gca::GradeVec;
using gca::Rational;
using gca::SquareConvention;
using gca::StructureTable;

TEST_CASE("quaternion table matches the Hamilton fixture") {
    const auto [h, grading] = gca::build_quaternions();
    REQUIRE(h.dim() == 4);
    CHECK(h.names() == std::vector<std::string>{"1", "i", "j", "k"});

    struct Fx { int i, j, sign, k; };
    const std::vector<Fx> fixture = {
        {0, 0, +1, 0}, {0, 1, +1, 1}, {0, 2, +1, 2}, {0, 3, +1, 3},
        {1, 0, +1, 1}, {1, 1, -1, 0}, {1, 2, +1, 3}, {1, 3, -1, 2},
        {2, 0, +1, 2}, {2, 1, -1, 3}, {2, 2, -1, 0}, {2, 3, +1, 1},
        {3, 0, +1, 3}, {3, 1, +1, 2}, {3, 2, -1, 1}, {3, 3, -1, 0},
    };
    for (const Fx& f : fixture) CHECK(h.cell(f.i, f.j) == Cell{{Rational(f.sign), f.k}});

    const Element i = Element::basis(h, 1), j = Element::basis(h, 2), k = Element::basis(h, 3);
    const Element minus_one = Rational(-1) * Element::basis(h, 0);
    CHECK((i * j) * k == minus_one);
    CHECK(k * k == minus_one);

    CHECK(grading.grades[0] == GradeVec::of({0, 0, 0}));
    CHECK(grading.grades[1] == GradeVec::of({0, 1, 1}));
    CHECK(grading.grades[2] == GradeVec::of({1, 0, 1}));
    CHECK(grading.grades[3] == GradeVec::of({1, 1, 0}));
}

TEST_CASE("clifford tables") {
    const StructureTable c1 = gca::build_clifford(1, SquareConvention::plus_ones(1));
    REQUIRE(c1.dim() == 2);
    CHECK(c1.cell(1, 1) == Cell{{Rational(1), 0}});
    CHECK(c1.names() == std::vector<std::string>{"1", "e[1]"});

    const StructureTable c3 = gca::build_clifford(3, SquareConvention::plus_ones(3));
    REQUIRE(c3.dim() == 8);
    // the even words carry a copy of the quaternions: 1, e[2,3], e[1,3], e[1,2]
    const auto [h, hg] = gca::build_quaternions();
    const std::vector<int> image = {0, 0b110, 0b101, 0b011};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const gca::Term& t = h.cell(a, b)[0];
            CHECK(c3.cell(image[a], image[b]) ==
                  Cell{{t.coeff, image[static_cast<std::size_t>(t.index)]}});
        }

    CHECK_THROWS_AS(gca::build_clifford(0, SquareConvention::plus_ones(0)), std::length_error);
    CHECK_THROWS_AS(gca::build_clifford(9, SquareConvention::plus_ones(9)), std::length_error);
}

TEST_CASE("clifford with negative squares is the quaternions in disguise") {
    const StructureTable c = gca::build_clifford(2, SquareConvention::from({-1, -1}));
    const StructureTable h = gca::build_quaternions().table;
    // oracle: brute-force relabeling 1,i,j,k -> 1, e[1], e[2], e[1,2] with signs
    std::vector<int> perm = {1, 2, 3};
    bool found = false;
    std::sort(perm.begin(), perm.end());
    do {
        for (int smask = 0; smask < 8; ++smask) {
            const std::vector<int> p = {0, perm[0], perm[1], perm[2]};
            const std::vector<int> sg = {1, (smask & 1) ? -1 : 1, (smask & 2) ? -1 : 1,
                                         (smask & 4) ? -1 : 1};
            found = found || gca::detail::tables_match_under(h, c, p, sg);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
}

TEST_CASE("cayley-dickson chain") {
    const StructureTable r = gca::build_reals();
    const auto c = gca::cayley_dickson_double(r, gca::standard_conjugation(r), Rational(-1));
    REQUIRE(c.table.dim() == 2);
    CHECK(c.table.cell(1, 1) == Cell{{Rational(-1), 0}});
    CHECK(c.conjugation.signs == std::vector<int>{1, -1});

    const auto h2 = gca::cayley_dickson_double(c.table, c.conjugation, Rational(-1));
    const StructureTable h = gca::build_quaternions().table;
    // the doubling identification i -> e1, j -> e2, k -> e3 is an isomorphism
    CHECK(gca::detail::tables_match_under(h, h2.table, {0, 1, 2, 3}, {1, 1, 1, 1}));
    CHECK(h2.conjugation.signs == std::vector<int>{1, -1, -1, -1});
}

TEST_CASE("octonions") {
    const StructureTable o = gca::build_octonions();
    REQUIRE(o.dim() == 8);
    CHECK(o.name(0) == "1");
    CHECK(o.name(7) == "e7");

    const Element minus_one = Rational(-1) * Element::basis(o, 0);
    for (int l = 1; l <= 7; ++l)
        CHECK(Element::basis(o, l) * Element::basis(o, l) == minus_one);
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) {
            CHECK(commutation_relation(o, a, b) == Commutation::Anticommute);
            // e_a e_b = +/- e_c for some c
            const Cell& cell = o.cell(a, b);
            REQUIRE(cell.size() == 1);
            CHECK(cell[0].index >= 1);
            CHECK((cell[0].coeff == Rational(1) || cell[0].coeff == Rational(-1)));
        }

    // embedded quaternion copy
    CHECK(o.cell(1, 2) == Cell{{Rational(1), 3}});

    // nonassociativity witness, both sides frozen
    const Element e1 = Element::basis(o, 1), e2 = Element::basis(o, 2), e4 = Element::basis(o, 4);
    CHECK((e1 * e2) * e4 == Element::basis(o, 7));
    CHECK(e1 * (e2 * e4) == Rational(-1) * Element::basis(o, 7));

    // alternativity on all basis pairs
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const Element x = Element::basis(o, a), y = Element::basis(o, b);
            CHECK((x * x) * y == x * (x * y));
            CHECK((x * y) * y == x * (y * y));
        }
}

TEST_CASE("octonion norm is multiplicative on seeded rational pairs") {
    const StructureTable o = gca::build_octonions();
    gca::SampleRng rng(gca::kDefaultSeed);
    for (int trial = 0; trial < 100; ++trial) {
        const Element x = gca::random_element(rng, o);
        const Element y = gca::random_element(rng, o);
        CHECK(norm_squared(x * y) == norm_squared(x) * norm_squared(y));
    }
}

TEST_CASE("group algebra of Z2^n") {
    const StructureTable z = gca::build_group_algebra_z2(2);
    REQUIRE(z.dim() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(z.cell(i, j) == Cell{{Rational(1), i ^ j}});
            CHECK(commutation_relation(z, i, j) == Commutation::Commute);
        }
}
