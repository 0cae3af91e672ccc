#include "doctest.h"

#include <set>

#include "arboreq/errors.hpp"
#include "arboreq/graph.hpp"
#include "testutil.hpp"

using namespace arboreq;

TEST_CASE("path power builders match the distance rule") {
    Graph k3 = Graph::path_power(3, 5);
    CHECK(k3.edge_count() == 3);  // n <= p+1 collapses to the complete graph

    Graph g = Graph::path_power(5, 2);
    CHECK(g.edge_count() == 7);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v)
            CHECK(g.has_edge(u, v) == (v - u <= 2));
}

TEST_CASE("cycle power builders match the cyclic distance rule") {
    Graph g = Graph::cycle_power(6, 2);
    CHECK(g.edge_count() == 12);
    for (Vertex v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 4));
    CHECK(!g.has_edge(0, 3));

    CHECK(Graph::cycle_power(9, 3).max_degree() == 6);
    CHECK_THROWS_AS(Graph::cycle_power(2, 1), parameter_error);
}

TEST_CASE("complete minus edge drops exactly {0, n-1}") {
    Graph g = Graph::complete_minus_edge(5);
    CHECK(g.edge_count() == 9);
    CHECK(!g.has_edge(0, 4));
    std::multiset<int> degs;
    for (Vertex v = 0; v < 5; ++v) degs.insert(g.degree(v));
    CHECK(degs == std::multiset<int>{3, 3, 4, 4, 4});
}

TEST_CASE("complete bipartite sides") {
    Graph g = Graph::complete_bipartite(2, 3);
    CHECK(g.edge_count() == 6);
    CHECK(!g.has_edge(0, 1));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("disjoint union relabels by offset") {
    Graph g = Graph::disjoint_union(Graph::complete(3), Graph::path_power(3, 1));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(3, 4));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.components().size() == 2);
}

TEST_CASE("graph constructor rejects malformed input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), parameter_error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), parameter_error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), parameter_error);
}

TEST_CASE("is_forest") {
    CHECK(Graph(1, {}).is_forest());
    CHECK(!Graph::complete(3).is_forest());
    CHECK(Graph::path_power(10, 1).is_forest());

    // path powers are forests exactly for p = 1 (once n >= 3)
    for (int n = 3; n <= 12; ++n)
        for (int p = 1; p <= 4; ++p)
            CHECK(Graph::path_power(n, p).is_forest() == (p == 1));
}

TEST_CASE("handshake identity for built graphs") {
    for (const Graph& g : {Graph::path_power(9, 3), Graph::cycle_power(8, 2),
                           Graph::complete_minus_edge(7), Graph::complete_bipartite(4, 5)}) {
        int deg_sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) deg_sum += g.degree(v);
        CHECK(deg_sum == 2 * g.edge_count());
    }
}

TEST_CASE("induced subgraph relabels and keeps exactly the internal edges") {
    Graph k4 = Graph::complete(4);
    auto sub = k4.induced_subgraph({0, 1});
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);

    Graph c8 = Graph::cycle_power(8, 2);
    auto s = c8.induced_subgraph({0, 1, 2, 3});
    CHECK(s.graph.edges() ==
          std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});

    auto whole = c8.induced_subgraph({0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(whole.graph.edges() == c8.edges());
    CHECK_THROWS_AS(k4.induced_subgraph({0, 0}), parameter_error);
    CHECK_THROWS_AS(k4.induced_subgraph({9}), parameter_error);
}

TEST_CASE("low degree removal and degeneracy") {
    auto [v, rest] = remove_low_degree_vertex(Graph::path_power(5, 1), 1);
    CHECK(v == 0);
    CHECK(rest.vertex_count() == 4);

    CHECK_THROWS_AS(remove_low_degree_vertex(Graph::complete(4), 2), structural_error);
    CHECK(is_degenerate(Graph::path_power(10, 2), 2));
    CHECK(!is_degenerate(Graph::complete(4), 2));
    CHECK(!is_degenerate(Graph::cycle_power(8, 1), 1));
}

TEST_CASE("regular degrees of large-enough powers") {
    CHECK(Graph::path_power(10, 3).max_degree() == 6);
    for (Vertex v = 0; v < 9; ++v) CHECK(Graph::cycle_power(9, 2).degree(v) == 4);
    CHECK(Graph::complete(5).max_degree() == 4);
    CHECK(Graph::path_power(2, 1).max_degree() == 1);
}
