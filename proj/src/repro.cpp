#include "arboreq/repro.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "arboreq/bipartite.hpp"
#include "arboreq/coloring.hpp"
#include "arboreq/errors.hpp"
#include "arboreq/extension.hpp"
#include "arboreq/graph.hpp"
#include "arboreq/oracle.hpp"
#include "arboreq/random.hpp"
#include "arboreq/solvers.hpp"

namespace arboreq {

namespace {

struct Deadline {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs = 0.0;

    bool expired() const {
        if (secs <= 0.0) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               secs;
    }
    double remaining() const {
        if (secs <= 0.0) return 0.0;
        double left = secs - std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           start)
                                 .count();
        return left > 0.01 ? left : 0.01;
    }
};

struct ClaimOutcome {
    std::string observed;
    bool skipped = false;
};

ClaimOutcome skip() { return {"", true}; }

struct Claim {
    std::string id;
    std::string ref;
    std::string command;
    std::string expected;
    std::function<ClaimOutcome(const Deadline&)> run;
};

BipartiteInstance constant_bipartite(int a, int b, int k) {
    BipartiteInstance inst;
    inst.a = a;
    inst.b = b;
    std::vector<ColorId> colors(k);
    for (int c = 0; c < k; ++c) colors[c] = c;
    inst.lists = ListAssignment::uniform(a + b, colors);
    return inst;
}

ClaimOutcome run_thm27_pos(const Deadline& dl) {
    BipartiteInstance inst = constant_bipartite(11, 17, 3);
    auto res = solve_bipartite_exact(inst, 3, 10);
    if (!res.feasible) return {"Infeasible@k=3"};
    Rng rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        if (dl.expired()) return skip();
        inst.lists = random_k_assignment(28, 3, 6, rng);
        if (!solve_bipartite_exact(inst, 3, 10).feasible)
            return {"Infeasible@k=3 (random trial " + std::to_string(trial) + ")"};
    }
    return {"Feasible@k=3"};
}

ClaimOutcome run_thm27_neg(const Deadline& dl) {
    auto profile = profile_oracle(11, 17, 4, 7, false);
    if (profile.feasible) return {"Feasible@k=4 (profile)"};
    if (dl.expired()) return skip();
    BipartiteInstance inst = constant_bipartite(11, 17, 4);
    auto res = solve_bipartite_exact(inst, 4, 7);
    return {res.feasible ? "Feasible@k=4 (search)" : "Infeasible@k=4"};
}

ClaimOutcome run_prop22_neg(const Deadline& dl) {
    Graph g = Graph::complete_bipartite(4, 15);
    Verdict v = decide_equitable_vertex_arborable(g, 3, SearchBudget::seconds(dl.remaining()));
    if (v.status == Status::Unknown) return skip();
    return {v.status == Status::Infeasible ? "Infeasible@vertex-k=3" : "Feasible@vertex-k=3"};
}

ClaimOutcome run_prop22_pos(const Deadline& dl) {
    BipartiteInstance inst;
    inst.a = 4;
    inst.b = 15;
    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        if (dl.expired()) return skip();
        inst.lists = random_k_assignment(19, 3, 6, rng);
        if (!solve_bipartite_exact(inst, 3, 7).feasible)
            return {"Infeasible (random trial " + std::to_string(trial) + ")"};
    }
    return {"Feasible@cap=7"};
}

ClaimOutcome run_lemma26(const Deadline& dl) {
    BipartiteInstance inst;
    inst.a = 7;
    inst.b = 11;
    Rng rng(26);
    for (int trial = 0; trial < 50; ++trial) {
        if (dl.expired()) return skip();
        inst.lists = random_k_assignment(18, 2, 4, rng);
        if (!solve_bipartite_exact(inst, 2, 10).feasible)
            return {"Infeasible (random trial " + std::to_string(trial) + ")"};
    }
    return {"Feasible@cap=10"};
}

ClaimOutcome run_anchors_pos(const Deadline&) {
    auto res = profile_oracle(9, 9, 2, 9, true);
    return {res.feasible ? "Feasible@vertex-k=2" : "Infeasible@vertex-k=2"};
}

ClaimOutcome run_anchors_neg(const Deadline&) {
    auto res = profile_oracle(9, 9, 3, 6, true);
    return {res.feasible ? "Feasible@vertex-k=3" : "Infeasible@vertex-k=3"};
}

// Shared loop for the constructive solvers: run `trials` seeded assignments
// through `solve` and both verifiers.
ClaimOutcome solver_suite(const Deadline& dl, std::uint64_t seed, int trials,
                          const std::function<Graph()>& make_graph, int k, int universe,
                          const std::function<SolveOutcome(const ListAssignment&)>& solve) {
    Graph g = make_graph();
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        if (dl.expired()) return skip();
        ListAssignment L = random_k_assignment(g.vertex_count(), k, universe, rng);
        SolveOutcome out = solve(L);
        auto rep = verify_arborable_L_coloring(g, L, out.coloring, true);
        auto eq = verify_equitable(g, k, out.coloring);
        if (!rep.list_respected || !rep.arborable || !rep.total || !eq.equitable())
            return {"verification failed (trial " + std::to_string(trial) + ")"};
    }
    return {"property"};
}

struct PowerCase {
    int n, p, k;
};

ClaimOutcome run_thm14(const Deadline& dl) {
    for (auto [n, p, k] : std::vector<PowerCase>{{8, 2, 2}, {15, 2, 3}, {9, 3, 3}, {16, 3, 4}}) {
        auto out = solver_suite(
            dl, 14, 20, [n = n, p = p] { return Graph::path_power(n, p); }, k, 2 * k + 1,
            [n = n, p = p, k = k](const ListAssignment& L) { return solve_path_power(n, p, k, L); });
        if (out.skipped || out.observed != "property") return out;
    }
    return {"property"};
}

ClaimOutcome run_prop16(const Deadline& dl) {
    for (auto [n, p, unused] : std::vector<PowerCase>{{9, 3, 0}, {15, 3, 0}, {12, 4, 0}, {17, 4, 0}}) {
        (void)unused;
        auto out = solver_suite(
            dl, 16, 20, [n = n, p = p] { return Graph::path_power(n, p); }, p - 1, 2 * p,
            [n = n, p = p](const ListAssignment& L) { return solve_path_power_pminus1(n, p, L); });
        if (out.skipped || out.observed != "property") return out;
    }
    return {"property"};
}

ClaimOutcome run_thm18(const Deadline& dl) {
    for (auto [n, p, unused] : std::vector<PowerCase>{{6, 2, 0}, {15, 2, 0}, {8, 3, 0}, {17, 3, 0}}) {
        (void)unused;
        int k = p + 1;
        auto out = solver_suite(
            dl, 18, 20, [n = n, p = p] { return Graph::cycle_power(n, p); }, k, 2 * k + 1,
            [n = n, p = p, k = k](const ListAssignment& L) {
                return solve_cycle_power(n, p, k, L);
            });
        if (out.skipped || out.observed != "property") return out;
    }
    return {"property"};
}

ClaimOutcome run_thm34(const Deadline& dl) {
    Rng graph_rng(34);
    int done = 0;
    for (int attempt = 0; attempt < 200 && done < 30; ++attempt) {
        if (dl.expired()) return skip();
        int n = 8 + graph_rng.index(13);
        Graph g = random_2degenerate(n, graph_rng);
        if (g.max_degree() < 3) continue;
        ++done;
        int k = (g.max_degree() + 1) / 2;
        auto out = solver_suite(
            dl, 340 + done, 5, [&g] { return g; }, k, 2 * k + 1,
            [&g, k](const ListAssignment& L) { return solve_2degenerate(g, k, L); });
        if (out.skipped || out.observed != "property") return out;
    }
    return {"property"};
}

ClaimOutcome run_prop31_k5e(const Deadline& dl) {
    Graph g = Graph::complete_minus_edge(5);
    ListAssignment L = ListAssignment::uniform(5, {0, 1});
    Verdict v = exact_equitable_arborable(g, L, 3, SearchBudget::seconds(dl.remaining()));
    if (v.status == Status::Unknown) return skip();
    return {v.status == Status::Feasible ? "Feasible@cap=3" : "Infeasible@cap=3"};
}

ClaimOutcome run_prop31_k5(const Deadline& dl) {
    Graph g = Graph::complete(5);
    ListAssignment L = ListAssignment::uniform(5, {0, 1});
    Verdict v = exact_equitable_arborable(g, L, 3, SearchBudget::seconds(dl.remaining()));
    if (v.status == Status::Unknown) return skip();
    return {v.status == Status::Infeasible ? "Infeasible@cap=3" : "Feasible@cap=3"};
}

ClaimOutcome run_prop31_suite(const Deadline& dl) {
    for (int n : {5, 7, 9, 11}) {
        int k = (n - 1) / 2;
        auto out = solver_suite(
            dl, 31, 25, [n] { return Graph::complete_minus_edge(n); }, k, 2 * k + 1,
            [n, k](const ListAssignment& L) { return solve_complete_minus_edge(n, k, L); });
        if (out.skipped || out.observed != "property") return out;
    }
    return {"property"};
}

ClaimOutcome run_prop32(const Deadline& dl) {
    Graph g = Graph::cycle_power(6, 2);
    Rng rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        if (dl.expired()) return skip();
        ListAssignment L = random_k_assignment(6, 2, 5, rng);
        SolveOutcome out = solve_regular_small(g, 2, L);
        auto rep = verify_arborable_L_coloring(g, L, out.coloring, true);
        auto eq = verify_equitable(g, 2, out.coloring);
        if (!rep.arborable || !rep.total || !rep.list_respected || eq.max_class_size > 3)
            return {"class over 3 (trial " + std::to_string(trial) + ")"};
    }
    return {"property"};
}

ClaimOutcome run_prop24(const Deadline& dl) {
    for (int k : {2, 3}) {
        int total = (k + 1) * (1 << k) - 1;
        for (int a = 1; a <= total / 2; ++a) {
            int b = total - a;
            Rng rng(24 * 100 + k * 10 + a);
            for (int trial = 0; trial < 10; ++trial) {
                if (dl.expired()) return skip();
                BipartiteInstance inst;
                inst.a = a;
                inst.b = b;
                inst.lists = random_k_assignment(total, k, 2 * k + 1, rng);
                PartialColoring f = derandomized_split(inst, k);
                if (!bipartite_arborable_check(inst, f))
                    return {"not arborable (k=" + std::to_string(k) + ", a=" + std::to_string(a) +
                            ")"};
            }
        }
    }
    return {"property"};
}

ClaimOutcome run_lemma15(const Deadline& dl) {
    Rng rng(15);
    int merges = 0;
    for (int trial = 0; trial < 200; ++trial) {
        if (dl.expired()) return skip();
        int n = 6 + rng.index(5);
        int k = 2 + rng.index(2);
        if (n <= k) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.index(3) == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        ListAssignment L = random_k_assignment(n, k, 2 * k, rng);
        std::vector<Vertex> peel = rng.sample_sorted(n, k);

        std::vector<Vertex> rest;
        std::set<Vertex> on_peel(peel.begin(), peel.end());
        for (Vertex v = 0; v < n; ++v)
            if (!on_peel.count(v)) rest.push_back(v);
        auto ind = g.induced_subgraph(rest);
        int base_cap = equity_cap(n, k) - 1;
        Verdict base = exact_equitable_arborable(ind.graph, L.restrict_to(rest), base_cap,
                                                 SearchBudget::seconds(1.0));
        if (base.status != Status::Feasible) continue;

        PartialColoring f(n);
        for (std::size_t i = 0; i < rest.size(); ++i)
            f.set(ind.original[i], *base.witness->color(static_cast<Vertex>(i)));

        ExtensionContext ctx = compute_d_lists(g, peel, L, f, 1);
        auto pc = find_peel_coloring(g, ctx);
        if (!pc) continue;
        merge_colorings(g, L, ctx, *pc);
        ++merges;
    }
    if (merges == 0) return {"no merge exercised"};
    return {"property"};
}

ClaimOutcome run_thm35(const Deadline& dl) {
    Rng rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        if (dl.expired()) return skip();
        int n = 8 + rng.index(5);
        Graph g = random_bounded_degree(n, 4, rng, 3);
        int cap = equity_cap(n, 2);
        for (int t = 0; t < 5; ++t) {
            ListAssignment L = random_k_assignment(n, 2, 5, rng);
            Verdict v = exact_equitable_arborable(g, L, cap, SearchBudget::seconds(dl.remaining()));
            if (v.status == Status::Unknown) return skip();
            if (v.status != Status::Feasible)
                return {"Infeasible (degree-bounded trial " + std::to_string(trial) + ")"};
        }
    }
    for (int n : {6, 7, 8}) {
        Graph g = Graph::cycle_power(n, 2);
        int cap = equity_cap(n, 2);
        for (int t = 0; t < 10; ++t) {
            if (dl.expired()) return skip();
            ListAssignment L = random_k_assignment(n, 2, 5, rng);
            Verdict v = exact_equitable_arborable(g, L, cap, SearchBudget::seconds(dl.remaining()));
            if (v.status == Status::Unknown) return skip();
            if (v.status != Status::Feasible)
                return {"Infeasible (4-regular n=" + std::to_string(n) + ")"};
        }
    }
    return {"property"};
}

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = {
        {"thm2.7-pos", "K_{11,17} is equitably 3-list arborable",
         "arboreq solve --bipartite --a 11 --b 17 --k 3 --cap 10", "Feasible@k=3", run_thm27_pos},
        {"thm2.7-neg", "K_{11,17} is not equitably 4-list arborable (constant 4-assignment)",
         "arboreq decide --bipartite --a 11 --b 17 --k 4 --cap 7 --constant", "Infeasible@k=4",
         run_thm27_neg},
        {"prop2.2-neg", "K_{4,15} is not equitably vertex 3-arborable",
         "arboreq decide --vertex --family complete-bipartite --a 4 --b 15 --k 3",
         "Infeasible@vertex-k=3", run_prop22_neg},
        {"prop2.2-pos", "K_{4,15} is equitably 3-list arborable (random 3-assignments)",
         "arboreq solve --bipartite --a 4 --b 15 --k 3 --cap 7 --seed 22", "Feasible@cap=7",
         run_prop22_pos},
        {"lemma2.6", "K_{7,11}: every 2-assignment admits a coloring using no color over 10 times",
         "arboreq solve --bipartite --a 7 --b 11 --k 2 --cap 10 --seed 26", "Feasible@cap=10",
         run_lemma26},
        {"anchors-pos", "K_{9,9} is equitably vertex 2-arborable",
         "arboreq decide --vertex --family complete-bipartite --a 9 --b 9 --k 2",
         "Feasible@vertex-k=2", run_anchors_pos},
        {"anchors-neg", "K_{9,9} is not equitably vertex 3-arborable",
         "arboreq decide --vertex --family complete-bipartite --a 9 --b 9 --k 3",
         "Infeasible@vertex-k=3", run_anchors_neg},
        {"thm1.4", "path powers P_n^p are equitably k-list arborable for k >= p",
         "arboreq solve --strategy path-power --seed 14", "property", run_thm14},
        {"prop1.6", "path powers P_n^p are equitably (p-1)-list arborable",
         "arboreq solve --strategy path-power-pminus1 --seed 16", "property", run_prop16},
        {"thm1.8", "cycle powers C_n^p are equitably k-list arborable for k >= p+1",
         "arboreq solve --strategy cycle-power --seed 18", "property", run_thm18},
        {"thm3.4", "2-degenerate graphs with maxdeg >= 3 at k = ceil(maxdeg/2)",
         "arboreq solve --strategy 2degenerate --seed 34", "property", run_thm34},
        {"prop3.1-k5e", "K_5 - e with constant 2-lists is equitably colorable at cap 3",
         "arboreq decide --family complete-minus-edge --n 5 --k 2 --cap 3 --constant",
         "Feasible@cap=3", run_prop31_k5e},
        {"prop3.1-k5", "K_5 with constant 2-lists has no equitable coloring at cap 3",
         "arboreq decide --family complete --n 5 --k 2 --cap 3 --constant", "Infeasible@cap=3",
         run_prop31_k5},
        {"prop3.1", "K_n - e at k = (n-1)/2, odd n", "arboreq solve --strategy complete-minus-edge",
         "property", run_prop31_suite},
        {"prop3.2", "4-regular graphs on 6 vertices: arborable 2-list colorings are equitable",
         "arboreq solve --strategy regular-small --seed 32", "property", run_prop32},
        {"prop2.4", "derandomized split covers all but at most k vertices",
         "arboreq solve --bipartite --derandomized --seed 24", "property", run_prop24},
        {"lemma1.5", "merge hypotheses imply an equitable arborable extension",
         "(library invariant suite, seed 15)", "property", run_lemma15},
        {"thm3.5", "graphs with maxdeg <= 4 and few degree-4 vertices at k = 2",
         "arboreq decide --seed 35", "property", run_thm35},
    };
    return claims;
}

}  // namespace

std::vector<std::string> reproduce_claim_ids() {
    std::vector<std::string> ids;
    for (const Claim& c : registry()) ids.push_back(c.id);
    return ids;
}

std::vector<ReproLine> run_reproduce(const ReproOptions& opts) {
    std::vector<const Claim*> selected;
    for (const Claim& c : registry())
        if (opts.subset == "all" || c.id.rfind(opts.subset, 0) == 0) selected.push_back(&c);

    std::vector<ReproLine> lines(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            const Claim& c = *selected[i];
            ReproLine& line = lines[i];
            line.claim_id = c.id;
            line.ref = c.ref;
            line.command = c.command;
            line.expected = c.expected;
            Deadline dl;
            dl.secs = opts.budget_secs;
            try {
                ClaimOutcome out = c.run(dl);
                if (out.skipped) {
                    line.observed = "budget exhausted";
                    line.status = "SKIP(budget)";
                } else {
                    line.observed = out.observed;
                    line.status = line.observed == line.expected ? "PASS" : "FAIL";
                }
            } catch (const std::exception& e) {
                line.observed = std::string("error: ") + e.what();
                line.status = "FAIL";
            }
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return lines;
}

bool all_passed(const std::vector<ReproLine>& lines) {
    for (const ReproLine& line : lines)
        if (line.status != "PASS") return false;
    return !lines.empty();
}

std::string format_repro_table(const std::vector<ReproLine>& lines) {
    std::ostringstream out;
    std::size_t idw = 8, expw = 8, obsw = 8;
    for (const ReproLine& l : lines) {
        idw = std::max(idw, l.claim_id.size());
        expw = std::max(expw, l.expected.size());
        obsw = std::max(obsw, l.observed.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    out << pad("claim", idw) << "  " << pad("expected", expw) << "  " << pad("observed", obsw)
        << "  status\n";
    for (const ReproLine& l : lines)
        out << pad(l.claim_id, idw) << "  " << pad(l.expected, expw) << "  "
            << pad(l.observed, obsw) << "  " << l.status << "\n";
    return out.str();
}

}  // namespace arboreq
