#include "doctest.h"

#include <filesystem>

#include "arboreq/bipartite.hpp"
#include "arboreq/errors.hpp"
#include "arboreq/io.hpp"
#include "arboreq/random.hpp"
#include "testutil.hpp"

using namespace arboreq;

namespace {

BipartiteInstance constant_instance(int a, int b, int k) {
    BipartiteInstance inst;
    inst.a = a;
    inst.b = b;
    std::vector<ColorId> colors(k);
    for (int c = 0; c < k; ++c) colors[c] = c;
    inst.lists = ListAssignment::uniform(a + b, colors);
    return inst;
}

}  // namespace

TEST_CASE("side-count arborability check") {
    BipartiteInstance inst = constant_instance(2, 2, 2);
    PartialColoring f(4);
    for (Vertex v = 0; v < 4; ++v) f.set(v, 1);
    CHECK(!bipartite_arborable_check(inst, f));  // two per side in one class
    f.set(1, 0);
    f.set(3, 0);
    CHECK(bipartite_arborable_check(inst, f));
    f.unset(3);
    CHECK(!bipartite_arborable_check(inst, f));  // not total
}

TEST_CASE("profile oracle reproduces the side-count census results") {
    CHECK(profile_oracle(9, 9, 2, 9, true).feasible);
    CHECK(!profile_oracle(9, 9, 3, 6, true).feasible);
    CHECK(!profile_oracle(11, 17, 4, 7, true).feasible);
    CHECK(!profile_oracle(4, 15, 3, 7, true).feasible);
    CHECK(profile_oracle(4, 15, 3, 7, false).feasible);  // caps only, no exact sizes

    auto res = profile_oracle(9, 9, 2, 9, true);
    REQUIRE(res.feasible);
    int ax = 0, bx = 0;
    for (auto [ac, bc] : res.witness.classes) {
        ax += ac;
        bx += bc;
        CHECK((ac <= 1 || bc <= 1));
        CHECK(ac + bc == 9);
    }
    CHECK(ax == 9);
    CHECK(bx == 9);
}

TEST_CASE("two-heavy extension builds the proof coloring when few lists meet the pair") {
    BipartiteInstance inst;
    inst.a = 4;
    inst.b = 5;
    inst.lists = ListAssignment(9);
    inst.lists.set_list(0, {1, 9});
    inst.lists.set_list(1, {1, 9});
    inst.lists.set_list(2, {2, 9});
    inst.lists.set_list(3, {2, 9});
    inst.lists.set_list(4, {1, 3});  // lists heavy color 1
    inst.lists.set_list(5, {3, 4});
    inst.lists.set_list(6, {3, 4});
    inst.lists.set_list(7, {2, 5});  // lists heavy color 2
    inst.lists.set_list(8, {4, 5});
    PartialColoring on_x(9);
    on_x.set(0, 1);
    on_x.set(1, 1);
    on_x.set(2, 2);
    on_x.set(3, 2);
    TwoHeavyResult res = extend_two_heavy(inst, on_x, {1, 2});
    REQUIRE(res.extended);
    CHECK(bipartite_arborable_check(inst, res.coloring));
}

TEST_CASE("two-heavy extension reports obstructions with three witnesses") {
    BipartiteInstance inst;
    inst.a = 4;
    inst.b = 3;
    inst.lists = ListAssignment(7);
    inst.lists.set_list(0, {1, 6});
    inst.lists.set_list(1, {1, 6});
    inst.lists.set_list(2, {2, 6});
    inst.lists.set_list(3, {2, 6});
    inst.lists.set_list(4, {1, 2});
    inst.lists.set_list(5, {1, 2});
    inst.lists.set_list(6, {1, 2});
    PartialColoring on_x(7);
    on_x.set(0, 1);
    on_x.set(1, 1);
    on_x.set(2, 2);
    on_x.set(3, 2);
    TwoHeavyResult res = extend_two_heavy(inst, on_x, {1, 2});
    CHECK(!res.extended);
    CHECK(res.obstruction == std::vector<Vertex>{4, 5, 6});
    // the oracle agrees no extension of this X-coloring exists: every Y list
    // meets the heavy pair, so some class gets two Y vertices
    bool any = false;
    for (ColorId c4 : {1, 2})
        for (ColorId c5 : {1, 2})
            for (ColorId c6 : {1, 2}) {
                PartialColoring f = on_x;
                f.set(4, c4);
                f.set(5, c5);
                f.set(6, c6);
                if (bipartite_arborable_check(inst, f)) any = true;
            }
    CHECK(!any);
}

TEST_CASE("two-heavy extension validates the heavy pair") {
    BipartiteInstance inst = constant_instance(3, 3, 2);
    PartialColoring on_x(6);
    on_x.set(0, 0);
    on_x.set(1, 0);
    on_x.set(2, 1);
    CHECK_THROWS_AS(extend_two_heavy(inst, on_x, {0, 1}), parameter_error);  // 1 used once
}

TEST_CASE("derandomized split respects its size bound") {
    Rng rng(51);
    for (int k : {2, 3}) {
        int total = (k + 1) * (1 << k) - 1;
        CHECK(total / (1 << k) <= k);
        for (int a : {1, total / 3, total / 2}) {
            BipartiteInstance inst;
            inst.a = a;
            inst.b = total - a;
            for (int t = 0; t < 10; ++t) {
                inst.lists = random_k_assignment(total, k, 2 * k + 1, rng);
                SplitDetail detail = derandomized_split_detail(inst, k);
                CHECK(static_cast<int>(detail.uncovered.size()) <= k);
                CHECK(bipartite_arborable_check(inst, detail.coloring));
            }
        }
    }
    BipartiteInstance big = constant_instance(6, 6, 2);  // 12 > 11 bound for k=2
    CHECK_THROWS_AS(derandomized_split(big, 2), parameter_error);
    CHECK_NOTHROW(derandomized_split(big, 2, /*best_effort=*/true));
}

TEST_CASE("exact bipartite solver agrees with brute force on small instances") {
    Rng rng(52);
    for (int trial = 0; trial < 120; ++trial) {
        int a = 1 + rng.index(3);
        int b = 1 + rng.index(4);
        BipartiteInstance inst;
        inst.a = a;
        inst.b = b;
        inst.lists = random_k_assignment(a + b, 2, 4, rng);
        int cap = 1 + rng.index(3);
        auto res = solve_bipartite_exact(inst, 2, cap);
        CHECK(res.feasible == testutil::brute_force_feasible(inst.graph(), inst.lists, cap));
        if (res.feasible)
            CHECK(testutil::naive_coloring_ok(inst.graph(), inst.lists, *res.coloring, cap));
    }
}

TEST_CASE("the constant-list refutations and their positive flips") {
    BipartiteInstance neg = constant_instance(11, 17, 4);
    CHECK(!solve_bipartite_exact(neg, 4, 7).feasible);
    CHECK(solve_bipartite_exact(neg, 4, 8).feasible);  // one extra slot is enough

    BipartiteInstance pos = constant_instance(11, 17, 3);
    auto res = solve_bipartite_exact(pos, 3, 10);
    REQUIRE(res.feasible);
    CHECK(testutil::max_class_size(*res.coloring) <= 10);
}

TEST_CASE("structured fixtures stay feasible at cap 10") {
    std::filesystem::path dir = std::filesystem::path(ARBOREQ_FIXTURES_DIR) / "lemma26";
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        BipartiteInstance inst;
        inst.a = 7;
        inst.b = 11;
        inst.lists = assignment_from_json(load_json_file(entry.path().string()));
        REQUIRE(inst.lists.size() == 18);
        REQUIRE(inst.lists.is_k_assignment(2));
        auto res = solve_bipartite_exact(inst, 2, 10);
        REQUIRE(res.feasible);
        CHECK(testutil::naive_coloring_ok(inst.graph(), inst.lists, *res.coloring, 10));
    }
    CHECK(count == 5);
}
