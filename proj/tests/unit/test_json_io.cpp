#include <catch2/catch_amalgamated.hpp>

#include "gca/builders.hpp"
#include "gca/json_io.hpp"
#include "gca/lie.hpp"
#include "gca/solver.hpp"

using gca::Grading;
using gca::Json;
using gca::LieStructure;
using gca::StructureTable;

TEST_CASE("table json round trip is byte-identical") {
    for (const StructureTable& t :
         {gca::build_quaternions().table, gca::build_octonions(),
          gca::build_clifford(2, gca::SquareConvention::from({-1, -1}))}) {
        const std::string first = dump_json(table_to_json(t));
        const StructureTable reread = table_from_json(gca::parse_json_text(first));
        CHECK(reread == t);
        CHECK(dump_json(table_to_json(reread)) == first);
    }
}

TEST_CASE("grading json round trip") {
    const Grading g = gca::build_quaternions().grading;
    const std::string first = dump_json(grading_to_json(g));
    const Grading reread = grading_from_json(gca::parse_json_text(first));
    CHECK(reread == g);
    CHECK(dump_json(grading_to_json(reread)) == first);
}

TEST_CASE("lie json round trip") {
    const LieStructure s = gca::sl2();
    const std::string first = dump_json(lie_to_json(s));
    const LieStructure reread = lie_from_json(gca::parse_json_text(first));
    CHECK(reread == s);
    CHECK(dump_json(lie_to_json(reread)) == first);
}

TEST_CASE("rationals are re-emitted in lowest terms") {
    const Json j = gca::parse_json_text(R"({
        "dim": 2, "names": ["1", "a"],
        "table": [[[[1,1,0]], [[2,2,1]]], [[[3,3,1]], [[2,2,0]]]]
    })");
    const StructureTable t = table_from_json(j);
    CHECK(t.cell(1, 1) == gca::Cell{{gca::Rational(1), 0}});
    const Json emitted = table_to_json(t);
    CHECK(emitted.at("table").at(1).at(1).at(0) == Json::array({1, 1, 0}));
    CHECK(table_from_json(gca::parse_json_text(dump_json(emitted))) == t);
}

TEST_CASE("solver result json shapes") {
    const Json feasible = solve_result_to_json(solve_grading(gca::build_quaternions().table));
    CHECK(feasible.at("feasible").get<bool>());
    CHECK_FALSE(feasible.at("grading").is_null());
    CHECK(feasible.at("witness").is_null());
    CHECK_FALSE(feasible.contains("certificate"));

    const Json infeasible = solve_result_to_json(solve_grading(gca::build_octonions()));
    CHECK_FALSE(infeasible.at("feasible").get<bool>());
    CHECK(infeasible.at("grading").is_null());
    CHECK(infeasible.at("witness").at("l1").get<int>() == 1);
    CHECK(infeasible.at("witness").at("l4").get<int>() == 4);
}

TEST_CASE("malformed input diagnostics") {
    CHECK_THROWS_AS(gca::parse_json_text("{\"dim\": "), nlohmann::json::parse_error);
    try {
        gca::parse_json_text("{\"dim\": ");
    } catch (const nlohmann::json::parse_error& e) {
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
    // zero denominator
    CHECK_THROWS_AS(table_from_json(gca::parse_json_text(
                        R"({"dim":1,"names":["1"],"table":[[[[1,0,0]]]]})")),
                    std::domain_error);
    // shape mismatch
    CHECK_THROWS_AS(table_from_json(gca::parse_json_text(
                        R"({"dim":2,"names":["1"],"table":[[[[1,1,0]]]]})")),
                    std::invalid_argument);
    // missing unit row
    CHECK_THROWS_AS(table_from_json(gca::parse_json_text(
                        R"({"dim":2,"names":["1","a"],
                            "table":[[[[1,1,0]],[[1,1,1]]],[[[1,1,1]],[[1,1,1]]]]})")),
                    std::invalid_argument);
}
