#include "doctest.h"

#include "arboreq/errors.hpp"
#include "arboreq/io.hpp"

using namespace arboreq;

TEST_CASE("graph json round trip is bit exact") {
    Graph g = Graph::cycle_power(6, 2);
    nlohmann::json j = graph_to_json(g);
    CHECK(j["n"] == 6);
    CHECK(j["edges"].size() == 12);
    CHECK(j["edges"][0] == nlohmann::json::array({0, 1}));
    CHECK(j["family"]["kind"] == "cycle_power");

    Graph back = graph_from_json(j);
    CHECK(back.edges() == g.edges());
    REQUIRE(back.family().has_value());
    CHECK(back.family()->p == 2);
    CHECK(graph_to_json(back).dump() == j.dump());
}

TEST_CASE("graph json validation") {
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::object()), parameter_error);
    CHECK_THROWS_AS(graph_from_json({{"n", 2}, {"edges", {{0, 1, 2}}}}), parameter_error);
    CHECK_THROWS_AS(graph_from_json({{"n", 1}, {"edges", {{0, 1}}}}), parameter_error);
}

TEST_CASE("assignment and coloring round trips") {
    ListAssignment L(3);
    L.set_list(0, {2, 1});
    L.set_list(1, {3, 4});
    L.set_list(2, {0, 7});
    nlohmann::json j = assignment_to_json(L);
    CHECK(j["lists"]["0"] == nlohmann::json::array({1, 2}));
    CHECK(assignment_from_json(j) == L);

    PartialColoring f(4);
    f.set(0, 5);
    f.set(2, 1);
    nlohmann::json cj = coloring_to_json(f);
    CHECK(cj["colors"].size() == 2);
    PartialColoring back = coloring_from_json(cj, 4);
    CHECK(back == f);
    CHECK_THROWS_AS(coloring_from_json(cj, 2), parameter_error);
}

TEST_CASE("certificate schema versioning") {
    Certificate cert;
    cert.k = 2;
    cert.theorem_tag = "path-power";
    cert.coloring = PartialColoring(2);
    cert.coloring.set(0, 1);
    cert.coloring.set(1, 2);
    cert.report.cap = 1;
    cert.report.max_class_size = 1;
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j["schema"] == 1);
    Certificate back = certificate_from_json(j, 2);
    CHECK(back.k == 2);
    CHECK(back.coloring == cert.coloring);

    j["schema"] = 2;
    CHECK_THROWS_AS(certificate_from_json(j, 2), parameter_error);
}

TEST_CASE("dot export lists every edge once") {
    std::string dot = graph_to_dot(Graph::complete(3));
    CHECK(dot.find("graph") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
    CHECK(dot.find("2 -- 1") == std::string::npos);
}

TEST_CASE("file helpers report unreadable paths") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/x.json"), parameter_error);
}
