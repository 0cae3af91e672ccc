#include "doctest.h"

#include <functional>
#include <vector>

#include "arboreq/oracle.hpp"
#include "arboreq/random.hpp"
#include "testutil.hpp"

using namespace arboreq;

TEST_CASE("constant 2-list verdicts on the classic 5-vertex trio") {
    ListAssignment L = ListAssignment::uniform(5, {0, 1});

    Verdict k5 = exact_equitable_arborable(Graph::complete(5), L, 3);
    CHECK(k5.status == Status::Infeasible);
    CHECK(!testutil::brute_force_feasible(Graph::complete(5), L, 3));

    Verdict k5e = exact_equitable_arborable(Graph::complete_minus_edge(5), L, 3);
    REQUIRE(k5e.status == Status::Feasible);
    CHECK(testutil::naive_coloring_ok(Graph::complete_minus_edge(5), L, *k5e.witness, 3));

    Verdict c5 = exact_equitable_arborable(Graph::cycle_power(5, 1), L, 3);
    REQUIRE(c5.status == Status::Feasible);
    CHECK(testutil::naive_coloring_ok(Graph::cycle_power(5, 1), L, *c5.witness, 3));
}

TEST_CASE("exact search agrees with brute force on random small instances") {
    Rng rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + rng.index(5);
        int k = 2 + rng.index(2);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.index(2) == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        ListAssignment L = random_k_assignment(n, k, 2 * k, rng);
        int cap = equity_cap(n, k);
        Verdict v = exact_equitable_arborable(g, L, cap);
        CHECK((v.status == Status::Feasible) == testutil::brute_force_feasible(g, L, cap));
        if (v.status == Status::Feasible)
            CHECK(testutil::naive_coloring_ok(g, L, *v.witness, cap));
    }
}

TEST_CASE("node budget exhaustion yields Unknown") {
    Graph g = Graph::complete_bipartite(6, 6);
    ListAssignment L = ListAssignment::uniform(12, {0, 1, 2});
    SearchBudget tiny;
    tiny.node_limit = 3;
    Verdict v = exact_equitable_arborable(g, L, 4, tiny);
    CHECK(v.status == Status::Unknown);
}

TEST_CASE("equitable vertex arborability on fixed instances") {
    CHECK(decide_equitable_vertex_arborable(Graph::complete(2), 2).status == Status::Feasible);
    CHECK(decide_equitable_vertex_arborable(Graph::complete_bipartite(9, 9), 2).status ==
          Status::Feasible);
    CHECK(decide_equitable_vertex_arborable(Graph::complete(5), 2).status == Status::Infeasible);
}

TEST_CASE("vertex decision agrees with brute force on random small graphs") {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + rng.index(5);
        int k = 2 + rng.index(2);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.index(2) == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        Verdict v = decide_equitable_vertex_arborable(g, k);
        CHECK((v.status == Status::Feasible) == testutil::brute_force_vertex_arborable(g, k));
        if (v.status == Status::Feasible)
            CHECK(verify_equitable_vertex_partition(g, k, *v.witness));
    }
}

namespace {

// Unpruned enumerator over every k-subset assignment from [universe]; the
// canonical-form search must reach the same verdict.
bool all_assignments_feasible(const Graph& g, int k, int universe) {
    int n = g.vertex_count();
    std::vector<std::vector<ColorId>> choices;
    std::vector<int> pick(k);
    std::function<void(int, int)> gen = [&](int from, int depth) {
        if (depth == k) {
            choices.emplace_back(pick.begin(), pick.end());
            return;
        }
        for (int c = from; c < universe; ++c) {
            pick[depth] = c;
            gen(c + 1, depth + 1);
        }
    };
    gen(0, 0);
    std::vector<std::size_t> idx(n, 0);
    std::function<bool(int, ListAssignment&)> rec = [&](int v, ListAssignment& L) -> bool {
        if (v == n) return testutil::brute_force_feasible(g, L, equity_cap(n, k));
        for (const auto& cand : choices) {
            L.set_list(v, cand);
            if (!rec(v + 1, L)) return false;
        }
        return true;
    };
    ListAssignment L(n);
    return rec(0, L);
}

}  // namespace

TEST_CASE("assignment enumeration verdicts and refutation soundness") {
    Verdict k3 = decide_equitably_k_list_arborable(Graph::complete(3), 2, 6);
    CHECK(k3.status == Status::Feasible);

    Verdict k1 = decide_equitably_k_list_arborable(Graph(1, {}), 3, 3);
    CHECK(k1.status == Status::Feasible);

    Verdict k5 = decide_equitably_k_list_arborable(Graph::complete(5), 2, 4);
    REQUIRE(k5.status == Status::Infeasible);
    REQUIRE(k5.refuted_assignment.has_value());
    CHECK(k5.refuted_assignment->is_k_assignment(2));
    CHECK(exact_equitable_arborable(Graph::complete(5), *k5.refuted_assignment,
                                    equity_cap(5, 2))
              .status == Status::Infeasible);
}

TEST_CASE("canonical-form pruning is sound on tiny graphs") {
    Rng rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + rng.index(3);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.index(2) == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        Verdict v = decide_equitably_k_list_arborable(g, 2, 4);
        CHECK((v.status == Status::Feasible) == all_assignments_feasible(g, 2, 4));
    }
}
