#include "doctest.h"

#include "arboreq/bipartite.hpp"
#include "arboreq/coloring.hpp"
#include "arboreq/errors.hpp"
#include "arboreq/graph.hpp"
#include "testutil.hpp"

using namespace arboreq;

TEST_CASE("equity cap arithmetic") {
    CHECK(equity_cap(19, 3) == 7);
    CHECK(equity_cap(28, 3) == 10);
    CHECK(equity_cap(28, 4) == 7);
    CHECK(equity_cap(6, 6) == 1);
    CHECK(equity_cap(1, 5) == 1);
}

TEST_CASE("list assignment basics") {
    ListAssignment L(3);
    L.set_list(0, {3, 1, 1, 2});
    CHECK(L.list(0) == std::vector<ColorId>{1, 2, 3});
    CHECK(L.has(0, 2));
    CHECK(!L.has(0, 4));
    CHECK_THROWS_AS(L.set_list(1, {-1}), parameter_error);

    L.set_list(1, {4, 5, 6});
    L.set_list(2, {1, 4, 9});
    CHECK(L.is_k_assignment(3));
    CHECK(L.uniform_size() == 3);
    CHECK(L.palette() == std::vector<ColorId>{1, 2, 3, 4, 5, 6, 9});

    ListAssignment sub = L.restrict_to({2, 0});
    CHECK(sub.list(0) == std::vector<ColorId>{1, 4, 9});
    CHECK(sub.list(1) == std::vector<ColorId>{1, 2, 3});
}

TEST_CASE("arborable verification on K_3") {
    Graph k3 = Graph::complete(3);
    ListAssignment L = ListAssignment::uniform(3, {1, 2});

    PartialColoring f(3);
    f.set(0, 1);
    f.set(1, 1);
    f.set(2, 2);
    auto rep = verify_arborable_L_coloring(k3, L, f, true);
    CHECK(rep.arborable);
    CHECK(rep.list_respected);
    CHECK(rep.total);

    PartialColoring mono(3);
    for (Vertex v = 0; v < 3; ++v) mono.set(v, 1);
    rep = verify_arborable_L_coloring(k3, L, mono, true);
    CHECK(!rep.arborable);
    REQUIRE(rep.offending_cycle.has_value());
    CHECK(rep.offending_cycle->size() == 3);
    CHECK(rep.offending_class == 1);
}

TEST_CASE("monochrome C_4 inside K_{2,2} is rejected") {
    Graph g = Graph::complete_bipartite(2, 2);
    ListAssignment L = ListAssignment::uniform(4, {1, 2});
    PartialColoring f(4);
    for (Vertex v = 0; v < 4; ++v) f.set(v, 1);
    auto rep = verify_arborable_L_coloring(g, L, f, true);
    CHECK(!rep.arborable);
    REQUIRE(rep.offending_cycle.has_value());
    CHECK(rep.offending_cycle->size() == 4);
}

TEST_CASE("equity verification flags oversize classes") {
    Graph g = Graph::complete_bipartite(11, 17);
    PartialColoring f(28);
    for (Vertex v = 0; v < 28; ++v) f.set(v, v < 8 ? 0 : 1 + (v % 3));
    auto rep = verify_equitable(g, 4, f);
    CHECK(rep.cap == 7);
    CHECK(rep.max_class_size == 8);
    CHECK(!rep.equitable());
    CHECK(rep.offending_class == 0);
}

TEST_CASE("exact equitable vertex partition multiset") {
    Graph g(19, {});
    PartialColoring f(19);
    // sizes (7,6,6): valid
    for (Vertex v = 0; v < 19; ++v) f.set(v, v < 7 ? 0 : (v < 13 ? 1 : 2));
    CHECK(verify_equitable_vertex_partition(g, 3, f));
    // sizes (7,7,5): wrong multiset
    for (Vertex v = 0; v < 19; ++v) f.set(v, v < 7 ? 0 : (v < 14 ? 1 : 2));
    CHECK(!verify_equitable_vertex_partition(g, 3, f));

    Graph k99 = Graph::complete_bipartite(9, 9);
    PartialColoring sides(18);
    for (Vertex v = 0; v < 18; ++v) sides.set(v, v < 9 ? 0 : 1);
    CHECK(verify_equitable_vertex_partition(k99, 2, sides));
}

TEST_CASE("verifier agrees with the side-count criterion on small K_{a,b}") {
    for (int a = 1; a <= 4; ++a)
        for (int b = a; a + b <= 8; ++b) {
            BipartiteInstance inst;
            inst.a = a;
            inst.b = b;
            inst.lists = ListAssignment::uniform(a + b, {0, 1, 2});
            Graph g = inst.graph();
            int n = a + b;
            std::vector<int> colors(n, 0);
            while (true) {
                PartialColoring f(n);
                for (Vertex v = 0; v < n; ++v) f.set(v, colors[v]);
                bool by_sides = bipartite_arborable_check(inst, f);
                bool by_dfs = verify_arborable_L_coloring(g, inst.lists, f, true).arborable;
                CHECK(by_sides == by_dfs);
                int i = n - 1;
                while (i >= 0 && colors[i] == 2) colors[i--] = 0;
                if (i < 0) break;
                ++colors[i];
            }
        }
}

TEST_CASE("a non-arborable partial coloring stays bad under extension") {
    Graph k4 = Graph::complete(4);
    ListAssignment L = ListAssignment::uniform(4, {1, 2});
    PartialColoring f(4);
    f.set(0, 1);
    f.set(1, 1);
    f.set(2, 1);  // triangle in class 1 already
    CHECK(!verify_arborable_L_coloring(k4, L, f, false).arborable);
    f.set(3, 2);
    CHECK(!verify_arborable_L_coloring(k4, L, f, true).arborable);
}
