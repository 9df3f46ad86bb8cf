// Acceptance suite: every check is exact (rational or F2 arithmetic), runs
// at desk scale, and prints one PASS/FAIL line. Exit code 0 only when all
// criteria hold.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gca/cli.hpp"
#include "gca/gca.hpp"
#include "gca/verify.hpp"

namespace {

using namespace gca;

int failures = 0;

void report(int number, const std::string& title, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

F2Matrix quaternion_parity_fixture() {
    F2Matrix p(4, 4);
    for (int a = 1; a < 4; ++a)
        for (int b = 1; b < 4; ++b)
            if (a != b) p.set(a, b, 1);
    return p;
}

// 1. Hamilton relations and the full 4x4 fixture.
bool hamilton_relations() {
    const auto [h, grading] = build_quaternions();
    struct Fx { int i, j, sign, k; };
    const std::vector<Fx> fixture = {
        {0, 0, +1, 0}, {0, 1, +1, 1}, {0, 2, +1, 2}, {0, 3, +1, 3},
        {1, 0, +1, 1}, {1, 1, -1, 0}, {1, 2, +1, 3}, {1, 3, -1, 2},
        {2, 0, +1, 2}, {2, 1, -1, 3}, {2, 2, -1, 0}, {2, 3, +1, 1},
        {3, 0, +1, 3}, {3, 1, +1, 2}, {3, 2, -1, 1}, {3, 3, -1, 0},
    };
    bool ok = true;
    for (const Fx& f : fixture) ok = ok && h.cell(f.i, f.j) == Cell{{Rational(f.sign), f.k}};
    const Element i = Element::basis(h, 1), j = Element::basis(h, 2), k = Element::basis(h, 3);
    const Element minus_one = Rational(-1) * Element::basis(h, 0);
    ok = ok && i * i == minus_one && j * j == minus_one && k * k == minus_one &&
         (i * j) * k == minus_one;
    return ok;
}

// 2. The built-in grading passes the graded-commutativity check on H.
bool graded_commutativity_of_h() {
    const auto [h, grading] = build_quaternions();
    return !check_graded_commutative(h, grading).has_value();
}

// 3. Transposition counting and the crossing formula agree exhaustively.
bool sign_rule_equivalence(std::string& detail) {
    long pairs = 0;
    for (int n = 1; n <= 4; ++n) {
        const unsigned subsets = 1u << n;
        for (unsigned qmask = 0; qmask < subsets; ++qmask) {
            std::vector<int> q(static_cast<std::size_t>(n), +1);
            for (int g = 0; g < n; ++g)
                if (qmask & (1u << g)) q[static_cast<std::size_t>(g)] = -1;
            const SquareConvention conv = SquareConvention::from(q);
            for (unsigned am = 0; am < subsets; ++am)
                for (unsigned bm = 0; bm < subsets; ++bm)
                    for (int sa : {+1, -1})
                        for (int sb : {+1, -1}) {
                            const SignedMonomial a = monomial_from_mask(n, am, sa);
                            const SignedMonomial b = monomial_from_mask(n, bm, sb);
                            ++pairs;
                            if (!(mono_mul(a, b, conv) == mono_mul_by_crossings(a, b, conv)))
                                return false;
                        }
        }
    }
    const SquareConvention conv8 = SquareConvention::plus_ones(8);
    for (unsigned am = 0; am < 256; ++am)
        for (unsigned bm = 0; bm < 256; ++bm) {
            const SignedMonomial a = monomial_from_mask(8, am);
            const SignedMonomial b = monomial_from_mask(8, bm);
            ++pairs;
            if (!(mono_mul(a, b, conv8) == mono_mul_by_crossings(a, b, conv8))) return false;
        }
    detail = std::to_string(pairs) + " pairs (n<=4 signed, all conventions; n=8 sweep)";
    return true;
}

// 4. Octonions: infeasible with a table-verified witness; brute force
//    finds nothing for any width up to 4.
bool octonion_impossibility(std::string& detail) {
    const StructureTable o = build_octonions();
    const SolveGradingResult r = solve_grading(o);
    if (r.feasible() || !r.witness) return false;
    const ObstructionWitness& w = *r.witness;
    const Cell& c = o.cell(w.l1, w.l2);
    bool ok = c.size() == 1 && c[0].index == w.l3;
    ok = ok && commutation_relation(o, w.l4, w.l1) == Commutation::Anticommute &&
         commutation_relation(o, w.l4, w.l2) == Commutation::Anticommute &&
         commutation_relation(o, w.l4, w.l3) == Commutation::Anticommute;
    // the forced parity chain: <s4,s3> = <s4,s1> + <s4,s2> = 0, against
    // the anticommutation demand <s4,s3> = 1
    for (int m = 1; m <= 4; ++m) ok = ok && !exhaustive_grading_search(o, m).has_value();
    detail = "witness (" + std::to_string(w.l1) + "," + std::to_string(w.l2) + "," +
             std::to_string(w.l3) + "," + std::to_string(w.l4) + "), m=1..4 exhausted";
    return ok;
}

// 5. Solver vs. brute-force oracle on the five-table corpus.
bool solver_oracle_agreement(std::string& detail) {
    const std::vector<std::pair<std::string, StructureTable>> corpus = {
        {"H", build_quaternions().table},
        {"Cl(1)", build_clifford(1, SquareConvention::plus_ones(1))},
        {"Cl(2)", build_clifford(2, SquareConvention::plus_ones(2))},
        {"O", build_octonions()},
        {"F2[Z2xZ2]", build_group_algebra_z2(2)},
    };
    detail.clear();
    for (const auto& [name, t] : corpus) {
        const SolveGradingResult r = solve_grading(t);
        const auto brute = exhaustive_grading_search(t, 4);
        if (r.feasible() != brute.has_value()) return false;
        if (r.feasible() && check_graded_commutative(t, *r.grading)) return false;
        if (brute && check_graded_commutative(t, *brute)) return false;
        detail += name + (r.feasible() ? "+ " : "- ");
    }
    return true;
}

// 6. Octonion construction sanity from the doubling.
bool octonion_sanity(std::string& detail) {
    const StructureTable o = build_octonions();
    const Element minus_one = Rational(-1) * Element::basis(o, 0);
    bool ok = true;
    for (int l = 1; l <= 7; ++l)
        ok = ok && Element::basis(o, l) * Element::basis(o, l) == minus_one;
    int anti = 0;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            if (commutation_relation(o, a, b) == Commutation::Anticommute) ++anti;
    ok = ok && anti == 21;
    for (int a = 0; a < 8 && ok; ++a)
        for (int b = 0; b < 8; ++b) {
            const Element x = Element::basis(o, a), y = Element::basis(o, b);
            ok = ok && (x * x) * y == x * (x * y) && (x * y) * y == x * (y * y);
        }
    const Element e1 = Element::basis(o, 1), e2 = Element::basis(o, 2), e4 = Element::basis(o, 4);
    ok = ok && (e1 * e2) * e4 == Element::basis(o, 7) &&
         e1 * (e2 * e4) == Rational(-1) * Element::basis(o, 7);
    SampleRng rng(kDefaultSeed);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const Element x = random_element(rng, o), y = random_element(rng, o);
        ok = norm_squared(x * y) == norm_squared(x) * norm_squared(y);
    }
    detail = "21 anticommuting pairs, witness (e1 e2) e4 = e7 vs e1 (e2 e4) = -e7, 100 norm pairs";
    return ok;
}

// 7. Quaternionization of sl2 and so3.
bool quaternionization(std::string& detail) {
    bool ok = true;
    for (const LieStructure& base : {sl2(), so3()}) {
        const GradedLieStructure gh = quaternionize(base);
        ok = ok && gh.lie.dim == 4 * base.dim;
        ok = ok && !check_graded_antisymmetry(gh).has_value();
        ok = ok && !check_graded_jacobi(gh).has_value();
        ok = ok && !check_bracket_grading(gh).has_value();
        for (int i = 0; i < base.dim && ok; ++i)
            for (int j = 0; j < base.dim; ++j)
                ok = ok && gh.lie.bracket(i, j) == base.bracket(i, j);
    }
    detail = "sl2 and so3, 12^3 triples each, degree-zero block identical";
    return ok;
}

// 8. Simplicity evidence for sl2_H plus the non-simple control.
bool simplicity_evidence(std::string& detail) {
    const GradedLieStructure gh = quaternionize(sl2());
    bool ok = center(gh).empty();
    for (int b = 0; b < gh.lie.dim && ok; ++b) {
        RationalVec seed(static_cast<std::size_t>(gh.lie.dim), Rational(0));
        seed[static_cast<std::size_t>(b)] = Rational(1);
        ok = static_cast<int>(ideal_closure(gh, seed).size()) == gh.lie.dim;
    }
    SampleRng rng(kDefaultSeed);
    for (int trial = 0; trial < 50 && ok; ++trial)
        ok = static_cast<int>(ideal_closure(gh, random_vector(rng, gh.lie.dim)).size()) ==
             gh.lie.dim;
    const GradedLieStructure control = append_abelian_line(gh, "z");
    RationalVec line(static_cast<std::size_t>(control.lie.dim), Rational(0));
    line.back() = Rational(1);
    ok = ok && ideal_closure(control, line).size() == 1;
    detail = "center trivial, 12 basis + 50 random seeds fill, control ideal dim 1";
    return ok;
}

// 9. CLI contract: exit codes, payloads, byte-identical round trip.
bool cli_contract(std::string& detail) {
    std::ostringstream out1, err1;
    const int code_h = cli::run({"solve-grading", "H", "--json"}, out1, err1);
    if (code_h != 0) return false;
    const Json jh = parse_json_text(out1.str());
    if (!jh.at("feasible").get<bool>()) return false;
    const Grading g = grading_from_json(jh.at("grading"));
    if (!(parity_matrix_of(g) == quaternion_parity_fixture())) return false;

    std::ostringstream out2, err2;
    const int code_o = cli::run({"solve-grading", "O", "--json"}, out2, err2);
    if (code_o != 1) return false;
    const Json jo = parse_json_text(out2.str());
    if (jo.at("feasible").get<bool>() || jo.at("witness").is_null()) return false;

    for (const StructureTable& t : {build_quaternions().table, build_octonions()}) {
        const std::string first = dump_json(table_to_json(t));
        const std::string second = dump_json(table_to_json(table_from_json(parse_json_text(first))));
        if (first != second) return false;
    }
    const std::string g1 = dump_json(grading_to_json(g));
    if (dump_json(grading_to_json(grading_from_json(parse_json_text(g1)))) != g1) return false;

    detail = "solve-grading H exit 0 with the canonical parity matrix, O exit 1 with witness, "
             "round trips byte-identical";
    return true;
}

}  // namespace

int main() {
    bool ok;
    std::string detail;

    report(1, "Hamilton relations and the full quaternion table", hamilton_relations());
    report(2, "graded commutativity of the quaternions", graded_commutativity_of_h());

    detail.clear();
    ok = sign_rule_equivalence(detail);
    report(3, "sign-rule equivalence (transpositions vs. crossings)", ok, detail);

    detail.clear();
    ok = octonion_impossibility(detail);
    report(4, "octonion impossibility with verified obstruction witness", ok, detail);

    detail.clear();
    ok = solver_oracle_agreement(detail);
    report(5, "solver agrees with the exhaustive oracle on the corpus", ok, detail);

    detail.clear();
    ok = octonion_sanity(detail);
    report(6, "octonion construction sanity", ok, detail);

    detail.clear();
    ok = quaternionization(detail);
    report(7, "quaternionization is a graded Lie algebra", ok, detail);

    detail.clear();
    ok = simplicity_evidence(detail);
    report(8, "simplicity evidence at desk scale", ok, detail);

    detail.clear();
    ok = cli_contract(detail);
    report(9, "CLI contract", ok, detail);

    if (failures == 0) {
        std::cout << "all 9 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
