#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gca/grading.hpp"
#include "gca/lie.hpp"
#include "gca/solver.hpp"
#include "gca/structure_table.hpp"

namespace gca {

// Emission always uses ordered_json with a fixed key order and lowest-term
// rationals, so emit -> parse -> emit is byte-identical.
using Json = nlohmann::ordered_json;

inline Json term_to_json(const Term& t) {
    return Json::array({t.coeff.num(), t.coeff.den(), t.index});
}

inline Term term_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("term must be a [num, den, index] triple");
    return Term{Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>()), j[2].get<int>()};
}

inline Json cell_to_json(const Cell& c) {
    Json out = Json::array();
    for (const Term& t : c) out.push_back(term_to_json(t));
    return out;
}

inline Cell cell_from_json(const Json& j) {
    Cell c;
    for (const Json& t : j) c.push_back(term_from_json(t));
    canonicalize(c);
    return c;
}

inline Json table_to_json(const StructureTable& t) {
    Json j;
    j["dim"] = t.dim();
    j["names"] = t.names();
    Json grid = Json::array();
    for (int i = 0; i < t.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < t.dim(); ++k) row.push_back(cell_to_json(t.cell(i, k)));
        grid.push_back(std::move(row));
    }
    j["table"] = std::move(grid);
    return j;
}

inline StructureTable table_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    auto names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != dim)
        throw std::invalid_argument("table: names length != dim");
    const Json& grid = j.at("table");
    if (static_cast<int>(grid.size()) != dim)
        throw std::invalid_argument("table: grid row count != dim");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(dim) * dim);
    for (const Json& row : grid) {
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("table: grid column count != dim");
        for (const Json& c : row) cells.push_back(cell_from_json(c));
    }
    return StructureTable(std::move(names), std::move(cells));
}

inline Json grading_to_json(const Grading& g) {
    Json j;
    j["width"] = g.width;
    Json grades = Json::array();
    for (const GradeVec& v : g.grades) {
        Json bits = Json::array();
        for (int t = 0; t < v.width(); ++t) bits.push_back(v.bit(t));
        grades.push_back(std::move(bits));
    }
    j["grades"] = std::move(grades);
    return j;
}

inline Grading grading_from_json(const Json& j) {
    Grading g;
    g.width = j.at("width").get<int>();
    for (const Json& bits : j.at("grades")) {
        GradeVec v(g.width);
        if (static_cast<int>(bits.size()) != g.width)
            throw std::invalid_argument("grading: grade width mismatch");
        for (int t = 0; t < g.width; ++t) v.set_bit(t, bits[static_cast<std::size_t>(t)].get<int>());
        g.grades.push_back(v);
    }
    return g;
}

inline Json lie_to_json(const LieStructure& s) {
    Json j;
    j["dim"] = s.dim;
    j["names"] = s.names;
    Json brackets = Json::array();
    for (int i = 0; i < s.dim; ++i)
        for (int k = i + 1; k < s.dim; ++k) {
            if (s.bracket(i, k).empty()) continue;
            Json b;
            b["i"] = i;
            b["j"] = k;
            b["terms"] = cell_to_json(s.bracket(i, k));
            brackets.push_back(std::move(b));
        }
    j["brackets"] = std::move(brackets);
    return j;
}

inline LieStructure lie_from_json(const Json& j) {
    auto names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != j.at("dim").get<int>())
        throw std::invalid_argument("lie structure: names length != dim");
    std::vector<std::tuple<int, int, Cell>> upper;
    for (const Json& b : j.at("brackets"))
        upper.emplace_back(b.at("i").get<int>(), b.at("j").get<int>(),
                           cell_from_json(b.at("terms")));
    return make_lie_structure(std::move(names), upper);
}

inline Json graded_lie_to_json(const GradedLieStructure& gs) {
    Json j = lie_to_json(gs.lie);
    j["grading"] = grading_to_json(gs.grading);
    return j;
}

inline Json witness_to_json(const ObstructionWitness& w) {
    Json j;
    j["l1"] = w.l1;
    j["l2"] = w.l2;
    j["l3"] = w.l3;
    j["l4"] = w.l4;
    return j;
}

inline Json certificate_to_json(const InfeasibilityCertificate& c) {
    Json rows = Json::array();
    for (const ConstraintTag& t : c.constraints) {
        Json r;
        switch (t.family) {
            case ConstraintTag::Family::Diagonal: r["family"] = "diagonal"; break;
            case ConstraintTag::Family::Pair: r["family"] = "pair"; break;
            case ConstraintTag::Family::Linearity: r["family"] = "linearity"; break;
        }
        r["i"] = t.i;
        r["j"] = t.j;
        if (t.l >= 0) r["l"] = t.l;
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Json solve_result_to_json(const SolveGradingResult& r) {
    Json j;
    j["feasible"] = r.feasible();
    j["grading"] = r.grading ? grading_to_json(*r.grading) : Json(nullptr);
    j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json_text(const std::string& text) { return Json::parse(text); }

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
}

}  // namespace gca
