#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gca/gca.hpp"
#include "gca/verify.hpp"

namespace gca::cli {

namespace detail {

inline StructureTable load_table(const std::string& spec) {
    if (spec == "H") return build_quaternions().table;
    if (spec == "O") return build_octonions();
    if (spec == "Cl3") return build_clifford(3, SquareConvention::plus_ones(3));
    if (spec == "Cl2-") return build_clifford(2, SquareConvention::from({-1, -1}));
    return table_from_json(load_json_file(spec));
}

inline LieStructure load_lie(const std::string& spec) {
    if (spec == "sl2") return sl2();
    if (spec == "so3") return so3();
    return lie_from_json(load_json_file(spec));
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline void render_table_grid(std::ostream& out, const StructureTable& t) {
    const int d = t.dim();
    std::vector<std::vector<std::string>> g(static_cast<std::size_t>(d) + 1,
                                            std::vector<std::string>(static_cast<std::size_t>(d) + 1));
    g[0][0] = "*";
    for (int i = 0; i < d; ++i) {
        g[0][static_cast<std::size_t>(i) + 1] = t.name(i);
        g[static_cast<std::size_t>(i) + 1][0] = t.name(i);
        for (int j = 0; j < d; ++j)
            g[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j) + 1] =
                cell_to_string(t.cell(i, j), t.names());
    }
    std::vector<std::size_t> w(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& row : g)
        for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
    for (std::size_t r = 0; r < g.size(); ++r) {
        std::ostringstream line;
        for (std::size_t c = 0; c < g[r].size(); ++c) {
            line << std::left << std::setw(static_cast<int>(w[c])) << g[r][c];
            if (c == 0) line << " | ";
            else if (c + 1 < g[r].size()) line << "  ";
        }
        out << line.str() << "\n";
        if (r == 0) {
            for (std::size_t c = 0; c < w.size(); ++c) {
                out << std::string(w[c], '-');
                out << (c == 0 ? "-+-" : (c + 1 < w.size() ? "--" : ""));
            }
            out << "\n";
        }
    }
}

inline void print_grading(std::ostream& out, const std::vector<std::string>& names,
                          const Grading& g) {
    out << "width: " << g.width << "\n";
    for (std::size_t i = 0; i < g.grades.size(); ++i)
        out << "grade(" << names[i] << ") = " << g.grades[i].to_string() << "\n";
}

inline void print_infeasible(std::ostream& out, const StructureTable& t,
                             const SolveGradingResult& r) {
    out << "infeasible: no (Z/2)^m grading exists for any m\n";
    if (r.witness) {
        const ObstructionWitness& w = *r.witness;
        const auto nm = [&](int l) { return t.name(l); };
        out << "witness: l1=" << w.l1 << " (" << nm(w.l1) << "), l2=" << w.l2 << " ("
            << nm(w.l2) << "), l3=" << w.l3 << " (" << nm(w.l3) << "), l4=" << w.l4 << " ("
            << nm(w.l4) << ")\n";
        out << "  " << nm(w.l1) << "*" << nm(w.l2) << " = "
            << cell_to_string(t.cell(w.l1, w.l2), t.names()) << " forces deg(" << nm(w.l3)
            << ") = deg(" << nm(w.l1) << ") + deg(" << nm(w.l2) << ")\n";
        out << "  " << nm(w.l4) << " anticommutes with " << nm(w.l1) << " and " << nm(w.l2)
            << ", hence would commute with " << nm(w.l3) << ",\n";
        out << "  but the table says " << nm(w.l4) << " and " << nm(w.l3) << " anticommute\n";
    } else if (r.certificate) {
        out << "contradictory constraint combination (no quadruple witness):\n";
        for (const ConstraintTag& tag : r.certificate->constraints) {
            switch (tag.family) {
                case ConstraintTag::Family::Diagonal:
                    out << "  self-pairing of " << t.name(tag.i) << " is even\n";
                    break;
                case ConstraintTag::Family::Pair:
                    out << "  pair (" << t.name(tag.i) << ", " << t.name(tag.j) << ") "
                        << (commutation_relation(t, tag.i, tag.j) == Commutation::Anticommute
                                ? "anticommutes"
                                : "commutes")
                        << "\n";
                    break;
                case ConstraintTag::Family::Linearity:
                    out << "  product " << t.name(tag.i) << "*" << t.name(tag.j)
                        << " is linear in degree against " << t.name(tag.l) << "\n";
                    break;
            }
        }
    }
}

}  // namespace detail

// Entry point shared by the binary and the in-process tests. args excludes
// the program name. Exit codes: 0 success/feasible/OK, 1 infeasible or
// violation, 2 usage or input errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graded commutative algebra engine: quaternion tables, (Z/2)^m grading "
                 "search with obstruction extraction, Cayley-Dickson doubling and "
                 "quaternionization of Lie algebras"};
    app.require_subcommand(1);

    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    int max_width = 0;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--seed", seed, "seed for the sampled checks (default 12345)");
    app.add_option("--max-width", max_width,
                   "cross-check grading verdicts against the exhaustive search up to this width");

    std::string table_spec, grading_path, lie_spec, gamma_text = "-1", suite = "all";
    std::string builtin_name, table_path;

    CLI::App* c_table = app.add_subcommand("table", "print a multiplication table");
    c_table->add_option("algebra", table_spec, "builtin name (H, O, Cl3, Cl2-) or JSON path")
        ->required();
    c_table->fallthrough();

    CLI::App* c_check = app.add_subcommand("check-grading", "verify a grading against a table");
    c_check->add_option("--builtin", builtin_name, "builtin table name");
    c_check->add_option("--table", table_path, "table JSON path");
    c_check->add_option("--grading", grading_path, "grading JSON path")->required();
    c_check->fallthrough();

    CLI::App* c_solve = app.add_subcommand("solve-grading",
                                           "decide whether a table admits a (Z/2)^m grading");
    c_solve->add_option("algebra", table_spec, "builtin name or JSON path")->required();
    c_solve->fallthrough();

    CLI::App* c_obstruct = app.add_subcommand("obstruct", "extract the grading obstruction");
    c_obstruct->add_option("algebra", table_spec, "builtin name or JSON path")->required();
    c_obstruct->fallthrough();

    CLI::App* c_double = app.add_subcommand("double", "Cayley-Dickson double of a table");
    c_double->add_option("algebra", table_spec, "builtin name or JSON path")->required();
    c_double->add_option("--gamma", gamma_text, "doubling parameter, e.g. -1 or 1/2");
    c_double->fallthrough();

    CLI::App* c_quat = app.add_subcommand("quaternionize",
                                          "tensor a Lie algebra with the quaternions");
    c_quat->add_option("lie", lie_spec, "builtin name (sl2, so3) or JSON path")->required();
    c_quat->fallthrough();

    CLI::App* c_verify = app.add_subcommand("verify", "run the invariant suites");
    c_verify->add_option("suite", suite,
                         "grading, monomials, algebra, solver, lie, or all (default)");
    c_verify->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("gca");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_table)) {
            const StructureTable t = detail::load_table(table_spec);
            if (json)
                out << dump_json(table_to_json(t));
            else
                detail::render_table_grid(out, t);
            return 0;
        }

        if (app.got_subcommand(c_check)) {
            if (builtin_name.empty() == table_path.empty()) {
                err << "error: give exactly one of --builtin or --table\n";
                return 2;
            }
            const StructureTable t =
                detail::load_table(builtin_name.empty() ? table_path : builtin_name);
            const Grading g = grading_from_json(load_json_file(grading_path));
            const auto violation = check_graded_commutative(t, g);
            if (json) {
                Json j;
                j["ok"] = !violation.has_value();
                if (violation) {
                    Json v;
                    v["kind"] = violation->kind == GradedCommViolation::Kind::CommutationSign
                                    ? "commutation-sign"
                                    : "product-grade";
                    v["i"] = violation->i;
                    v["j"] = violation->j;
                    v["expected_sign"] = violation->expected_sign;
                    v["found_sign"] = violation->found_sign;
                    v["detail"] = violation->detail;
                    j["violation"] = std::move(v);
                } else {
                    j["violation"] = nullptr;
                }
                out << dump_json(j);
            } else if (violation) {
                out << "violation at (" << violation->i << "," << violation->j
                    << "): " << violation->detail << "\n";
            } else {
                out << "OK\n";
            }
            return violation ? 1 : 0;
        }

        if (app.got_subcommand(c_solve) || app.got_subcommand(c_obstruct)) {
            const StructureTable t = detail::load_table(table_spec);
            const SolveGradingResult r = solve_grading(t);
            if (max_width > 0 && t.dim() <= 16) {
                bool brute = false;
                for (int m = 1; m <= max_width && !brute; ++m)
                    brute = exhaustive_grading_search(t, m).has_value();
                if (brute != r.feasible()) {
                    err << "error: solver verdict disagrees with the exhaustive oracle\n";
                    return 1;
                }
            }
            if (json) {
                out << dump_json(solve_result_to_json(r));
            } else if (r.feasible()) {
                out << "feasible\n";
                detail::print_grading(out, t.names(), *r.grading);
            } else {
                detail::print_infeasible(out, t, r);
            }
            return r.feasible() ? 0 : 1;
        }

        if (app.got_subcommand(c_double)) {
            const StructureTable t = detail::load_table(table_spec);
            const Rational gamma = detail::parse_rational(gamma_text);
            const DoubledTable d = cayley_dickson_double(t, standard_conjugation(t), gamma);
            if (json)
                out << dump_json(table_to_json(d.table));
            else
                detail::render_table_grid(out, d.table);
            return 0;
        }

        if (app.got_subcommand(c_quat)) {
            const LieStructure s = detail::load_lie(lie_spec);
            if (auto v = validate_lie(s)) {
                err << "violation: input is not a Lie structure ("
                    << (v->kind == LieViolation::Kind::Antisymmetry ? "antisymmetry"
                                                                    : "Jacobi")
                    << " fails at indices " << v->i << "," << v->j << "," << v->k << ")\n";
                return 1;
            }
            const GradedLieStructure gh = quaternionize(s);
            const bool ok = !check_graded_antisymmetry(gh) && !check_graded_jacobi(gh) &&
                            !check_bracket_grading(gh);
            if (json) {
                out << dump_json(graded_lie_to_json(gh));
            } else {
                out << "dim: " << gh.lie.dim << "\n";
                detail::print_grading(out, gh.lie.names, gh.grading);
                out << "graded antisymmetry: " << (ok ? "OK" : "FAIL") << "\n";
                out << "graded Jacobi: OK over " << gh.lie.dim << "^3 triples\n";
                for (int i = 0; i < gh.lie.dim; ++i)
                    for (int j = i + 1; j < gh.lie.dim; ++j)
                        if (!gh.lie.bracket(i, j).empty())
                            out << "[" << gh.lie.names[static_cast<std::size_t>(i)] << ", "
                                << gh.lie.names[static_cast<std::size_t>(j)] << "] = "
                                << cell_to_string(gh.lie.bracket(i, j), gh.lie.names) << "\n";
            }
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(c_verify)) {
            std::vector<CheckResult> results;
            if (suite == "grading") results = verify_grading(seed);
            else if (suite == "monomials") results = verify_monomials();
            else if (suite == "algebra") results = verify_algebra(seed);
            else if (suite == "solver") results = verify_solver();
            else if (suite == "lie") results = verify_lie(seed);
            else if (suite == "all") results = verify_all(seed);
            else {
                err << "error: unknown suite '" << suite << "'\n";
                return 2;
            }
            int failed = 0;
            if (json) {
                Json j = Json::array();
                for (const CheckResult& r : results) {
                    Json e;
                    e["name"] = r.name;
                    e["pass"] = r.pass;
                    e["detail"] = r.detail;
                    j.push_back(std::move(e));
                    if (!r.pass) ++failed;
                }
                out << dump_json(j);
            } else {
                for (const CheckResult& r : results) {
                    out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
                    if (!r.detail.empty()) out << "  [" << r.detail << "]";
                    out << "\n";
                    if (!r.pass) ++failed;
                }
                out << results.size() << " checks, " << failed << " failed\n";
            }
            return failed == 0 ? 0 : 1;
        }
    } catch (const UnsupportedTableError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace gca::cli
