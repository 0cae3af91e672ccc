#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arboreq/bipartite.hpp"
#include "arboreq/coloring.hpp"
#include "arboreq/errors.hpp"
#include "arboreq/graph.hpp"
#include "arboreq/io.hpp"
#include "arboreq/oracle.hpp"
#include "arboreq/random.hpp"
#include "arboreq/repro.hpp"
#include "arboreq/solvers.hpp"

namespace {

using namespace arboreq;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitUnknown = 3;

double parse_budget(std::string text) {
    if (!text.empty() && text.back() == 's') text.pop_back();
    return std::stod(text);
}

double default_budget() {
    if (const char* env = std::getenv("ARBOREQ_BUDGET_SECS")) return parse_budget(env);
    return 120.0;
}

void emit(const std::string& out_path, const nlohmann::json& j) {
    if (out_path.empty() || out_path == "-")
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out_path, j);
}

struct GenOptions {
    std::string family;
    int n = 0, p = 0, a = 0, b = 0;
    std::string of;
    std::string out;
};

int cmd_gen(const GenOptions& opt) {
    Graph g;
    if (opt.family == "path-power") {
        g = Graph::path_power(opt.n, opt.p);
    } else if (opt.family == "cycle-power") {
        g = Graph::cycle_power(opt.n, opt.p);
    } else if (opt.family == "complete") {
        g = Graph::complete(opt.n);
    } else if (opt.family == "complete-minus-edge") {
        g = Graph::complete_minus_edge(opt.n);
    } else if (opt.family == "complete-bipartite") {
        g = Graph::complete_bipartite(opt.a, opt.b);
    } else if (opt.family == "union") {
        std::vector<std::string> parts;
        std::stringstream ss(opt.of);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        if (parts.size() < 2) throw parameter_error("union needs at least two graph files");
        g = graph_from_json(load_json_file(parts[0]));
        for (std::size_t i = 1; i < parts.size(); ++i)
            g = Graph::disjoint_union(g, graph_from_json(load_json_file(parts[i])));
    } else {
        throw parameter_error("unknown family: " + opt.family);
    }
    emit(opt.out, graph_to_json(g));
    return kExitOk;
}

struct SolveOptions {
    std::string graph_path;
    std::string lists_path;
    int k = 0;
    bool constant_lists = false;
    bool random_lists = false;
    int universe = 0;
    std::uint64_t seed = 0;
    std::string strategy = "auto";
    int cap = 0;  // 0 = ceil(n/k)
    std::string out;
    std::string budget_text;
};

std::string auto_strategy(const Graph& g, int k) {
    if (g.family()) {
        const FamilyTag& tag = *g.family();
        if (tag.kind == "path_power") {
            if (k >= tag.p) return "path-power";
            if (k == tag.p - 1 && tag.p >= 3) return "path-power-pminus1";
        }
        if (tag.kind == "cycle_power" && k >= tag.p + 1) return "cycle-power";
        if (tag.kind == "complete_minus_edge") return "complete-minus-edge";
        if (tag.kind == "complete_bipartite") return "bipartite-exact";
    }
    int maxdeg = g.vertex_count() > 0 ? g.max_degree() : 0;
    if (maxdeg <= 2 && k >= 2) return "low-degree";
    if (is_degenerate(g, 2) && k >= (maxdeg + 1) / 2) return "2degenerate";
    if (g.vertex_count() == maxdeg + 2 && maxdeg % 2 == 0 && maxdeg >= 4) {
        bool regular = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != maxdeg) regular = false;
        if (regular && k >= maxdeg / 2) return "regular-small";
    }
    return "exact";
}

int cmd_solve(const SolveOptions& opt) {
    Graph g = graph_from_json(load_json_file(opt.graph_path));
    int n = g.vertex_count();
    if (opt.k < 1) throw parameter_error("solve: --k must be at least 1");

    ListAssignment L;
    if (!opt.lists_path.empty()) {
        L = assignment_from_json(load_json_file(opt.lists_path));
        if (L.size() < n) {
            ListAssignment padded(n);
            for (Vertex v = 0; v < L.size(); ++v) padded.set_list(v, L.list(v));
            L = padded;
        }
    } else if (opt.constant_lists) {
        std::vector<ColorId> colors(opt.k);
        for (int c = 0; c < opt.k; ++c) colors[c] = c;
        L = ListAssignment::uniform(n, colors);
    } else if (opt.random_lists) {
        Rng rng(opt.seed);
        int universe = opt.universe > 0 ? opt.universe : 2 * opt.k;
        L = random_k_assignment(n, opt.k, universe, rng);
    } else {
        throw parameter_error("solve: provide --lists, --constant, or --random");
    }
    if (!L.is_k_assignment(opt.k))
        throw parameter_error("solve: lists do not form a " + std::to_string(opt.k) +
                              "-assignment");

    int cap = opt.cap > 0 ? opt.cap : equity_cap(n, opt.k);
    std::string strategy = opt.strategy == "auto" ? auto_strategy(g, opt.k) : opt.strategy;

    Certificate cert;
    cert.k = opt.k;

    auto finish_outcome = [&](const SolveOutcome& out) {
        cert.theorem_tag = out.theorem_tag;
        cert.coloring = out.coloring;
    };

    const FamilyTag* tag = g.family() ? &*g.family() : nullptr;
    if (strategy == "path-power") {
        if (!tag || tag->kind != "path_power")
            throw parameter_error("path-power strategy needs a path_power family tag");
        finish_outcome(solve_path_power(n, tag->p, opt.k, L));
    } else if (strategy == "path-power-pminus1") {
        if (!tag || tag->kind != "path_power")
            throw parameter_error("path-power-pminus1 strategy needs a path_power family tag");
        finish_outcome(solve_path_power_pminus1(n, tag->p, L));
    } else if (strategy == "cycle-power") {
        if (!tag || tag->kind != "cycle_power")
            throw parameter_error("cycle-power strategy needs a cycle_power family tag");
        finish_outcome(solve_cycle_power(n, tag->p, opt.k, L));
    } else if (strategy == "2degenerate") {
        finish_outcome(solve_2degenerate(g, opt.k, L));
    } else if (strategy == "low-degree") {
        finish_outcome(solve_low_degree(g, opt.k, L));
    } else if (strategy == "complete-minus-edge") {
        if (!tag || tag->kind != "complete_minus_edge")
            throw parameter_error("complete-minus-edge strategy needs the matching family tag");
        finish_outcome(solve_complete_minus_edge(n, opt.k, L));
    } else if (strategy == "regular-small") {
        finish_outcome(solve_regular_small(g, opt.k, L));
    } else if (strategy == "bipartite-exact") {
        if (!tag || tag->kind != "complete_bipartite")
            throw parameter_error("bipartite-exact strategy needs a complete_bipartite family tag");
        BipartiteInstance inst{tag->a, tag->b, L};
        auto res = solve_bipartite_exact(inst, opt.k, cap);
        if (!res.feasible) {
            std::cerr << "infeasible at cap " << cap << "\n";
            return kExitFail;
        }
        cert.theorem_tag = "bipartite-exact";
        cert.coloring = *res.coloring;
    } else if (strategy == "exact") {
        double budget = opt.budget_text.empty() ? default_budget() : parse_budget(opt.budget_text);
        Verdict v = exact_equitable_arborable(g, L, cap, SearchBudget::seconds(budget));
        if (v.status == Status::Unknown) {
            std::cerr << "budget exhausted\n";
            return kExitUnknown;
        }
        if (v.status == Status::Infeasible) {
            std::cerr << "infeasible at cap " << cap << "\n";
            return kExitFail;
        }
        cert.theorem_tag = "exact-search";
        cert.coloring = *v.witness;
    } else {
        throw parameter_error("unknown strategy: " + strategy);
    }

    cert.report = verify_arborable_L_coloring(g, L, cert.coloring, true);
    auto eq = verify_equitable(g, opt.k, cert.coloring);
    cert.report.cap = cap;
    cert.report.max_class_size = eq.max_class_size;
    if (!cert.report.list_respected || !cert.report.arborable || !cert.report.total ||
        cert.report.max_class_size > cap) {
        std::cerr << "solver output failed verification\n";
        return kExitFail;
    }
    emit(opt.out, certificate_to_json(cert));
    return kExitOk;
}

struct VerifyOptions {
    std::string graph_path;
    std::string lists_path;
    std::string coloring_path;
    int k = 0;
};

int cmd_verify(const VerifyOptions& opt) {
    Graph g = graph_from_json(load_json_file(opt.graph_path));
    nlohmann::json cj = load_json_file(opt.coloring_path);
    PartialColoring f;
    int k = opt.k;
    if (cj.contains("schema")) {
        Certificate cert = certificate_from_json(cj, g.vertex_count());
        f = cert.coloring;
        if (k == 0) k = cert.k;
    } else {
        f = coloring_from_json(cj, g.vertex_count());
    }
    if (k < 1) throw parameter_error("verify: --k required when the coloring file has none");

    bool ok = true;
    if (!opt.lists_path.empty()) {
        ListAssignment L = assignment_from_json(load_json_file(opt.lists_path));
        auto rep = verify_arborable_L_coloring(g, L, f, true);
        ok = rep.list_respected && rep.arborable && rep.total;
        std::cout << "list_respected=" << rep.list_respected << " arborable=" << rep.arborable
                  << " total=" << rep.total << "\n";
        if (rep.offending_cycle) {
            std::cout << "cycle in class " << *rep.offending_class << ":";
            for (Vertex v : *rep.offending_cycle) std::cout << " " << v;
            std::cout << "\n";
        }
    } else {
        ok = f.is_total();
        for (const auto& [c, members] : f.classes()) {
            auto ind = g.induced_subgraph(members);
            if (!ind.graph.is_forest()) {
                ok = false;
                std::cout << "class " << c << " is not a forest\n";
            }
        }
    }
    auto eq = verify_equitable(g, k, f);
    std::cout << "cap=" << eq.cap << " max_class=" << eq.max_class_size
              << " equitable=" << eq.equitable() << "\n";
    if (!eq.equitable()) {
        std::cout << "class " << *eq.offending_class << " exceeds the cap\n";
        ok = false;
    }
    return ok ? kExitOk : kExitFail;
}

struct DecideOptions {
    std::string graph_path;
    std::string lists_path;
    int k = 0;
    int cap = 0;
    int universe = 0;
    bool vertex = false;
    bool all_assignments = false;
    std::string budget_text;
    std::string out;
};

int cmd_decide(const DecideOptions& opt) {
    Graph g = graph_from_json(load_json_file(opt.graph_path));
    int n = g.vertex_count();
    double budget = opt.budget_text.empty() ? default_budget() : parse_budget(opt.budget_text);
    SearchBudget sb = SearchBudget::seconds(budget);

    Verdict v;
    if (opt.vertex) {
        if (opt.k < 1) throw parameter_error("decide --vertex needs --k");
        v = decide_equitable_vertex_arborable(g, opt.k, sb);
    } else if (opt.all_assignments) {
        if (opt.k < 1) throw parameter_error("decide --all-assignments needs --k");
        int universe = opt.universe > 0 ? opt.universe : 2 * opt.k;
        if (universe < opt.k * n)
            std::cerr << "note: universe " << universe << " < k*n = " << opt.k * n
                      << "; an Infeasible verdict is conclusive, Feasible is not\n";
        v = decide_equitably_k_list_arborable(g, opt.k, universe, sb);
        if (v.status == Status::Infeasible && v.refuted_assignment && !opt.out.empty())
            save_json_file(opt.out, assignment_to_json(*v.refuted_assignment));
    } else {
        if (opt.lists_path.empty())
            throw parameter_error("decide: provide --lists, --vertex, or --all-assignments");
        ListAssignment L = assignment_from_json(load_json_file(opt.lists_path));
        if (opt.k < 1) throw parameter_error("decide needs --k");
        int cap = opt.cap > 0 ? opt.cap : equity_cap(n, opt.k);
        v = exact_equitable_arborable(g, L, cap, sb);
        if (v.status == Status::Feasible && v.witness && !opt.out.empty())
            save_json_file(opt.out, coloring_to_json(*v.witness));
    }

    switch (v.status) {
        case Status::Feasible:
            std::cout << "Feasible (nodes=" << v.nodes << ")\n";
            return kExitOk;
        case Status::Infeasible:
            std::cout << "Infeasible (nodes=" << v.nodes << ")\n";
            return kExitFail;
        case Status::Unknown:
            std::cout << "Unknown (budget exhausted, nodes=" << v.nodes << ")\n";
            return kExitUnknown;
    }
    return kExitUnknown;
}

struct ReproCmdOptions {
    std::string subset = "all";
    bool all = false;
    std::string budget_text;
    int jobs = 1;
    std::string json_out;
};

int cmd_reproduce(const ReproCmdOptions& opt) {
    ReproOptions ro;
    ro.subset = opt.all ? "all" : opt.subset;
    ro.budget_secs = opt.budget_text.empty() ? default_budget() : parse_budget(opt.budget_text);
    ro.jobs = opt.jobs;
    auto lines = run_reproduce(ro);
    if (lines.empty()) {
        std::cerr << "no claims match subset " << ro.subset << "\n";
        return kExitPrecondition;
    }
    std::cout << format_repro_table(lines);
    if (!opt.json_out.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const ReproLine& l : lines)
            j.push_back({{"claim_id", l.claim_id},
                         {"ref", l.ref},
                         {"command", l.command},
                         {"expected", l.expected},
                         {"observed", l.observed},
                         {"status", l.status}});
        save_json_file(opt.json_out, j);
    }
    bool any_fail = false, any_skip = false;
    for (const ReproLine& l : lines) {
        if (l.status == "FAIL") any_fail = true;
        if (l.status != "PASS" && l.status != "FAIL") any_skip = true;
    }
    if (any_fail) return kExitFail;
    if (any_skip) return kExitUnknown;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable list arboricity toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cgen = app.add_subcommand("gen", "generate a graph JSON file");
    cgen->add_option("--family", gen.family)->required();
    cgen->add_option("--n", gen.n);
    cgen->add_option("--p", gen.p);
    cgen->add_option("--a", gen.a);
    cgen->add_option("--b", gen.b);
    cgen->add_option("--of", gen.of);
    cgen->add_option("--out,-o", gen.out);

    SolveOptions solve;
    auto* csolve = app.add_subcommand("solve", "construct an equitable arborable coloring");
    csolve->add_option("--graph,-g", solve.graph_path)->required();
    csolve->add_option("--lists,-l", solve.lists_path);
    csolve->add_option("--k", solve.k)->required();
    csolve->add_flag("--constant", solve.constant_lists);
    csolve->add_flag("--random", solve.random_lists);
    csolve->add_option("--universe", solve.universe);
    csolve->add_option("--seed", solve.seed);
    csolve->add_option("--strategy", solve.strategy);
    csolve->add_option("--cap", solve.cap);
    csolve->add_option("--budget", solve.budget_text);
    csolve->add_option("--out,-o", solve.out);

    VerifyOptions verify;
    auto* cverify = app.add_subcommand("verify", "check a coloring or certificate");
    cverify->add_option("--graph,-g", verify.graph_path)->required();
    cverify->add_option("--lists,-l", verify.lists_path);
    cverify->add_option("--coloring,-c", verify.coloring_path)->required();
    cverify->add_option("--k", verify.k);

    DecideOptions decide;
    auto* cdecide = app.add_subcommand("decide", "exact decision procedures");
    cdecide->add_option("--graph,-g", decide.graph_path)->required();
    cdecide->add_option("--lists,-l", decide.lists_path);
    cdecide->add_option("--k", decide.k);
    cdecide->add_option("--cap", decide.cap);
    cdecide->add_option("--universe", decide.universe);
    cdecide->add_flag("--vertex", decide.vertex);
    cdecide->add_flag("--all-assignments", decide.all_assignments);
    cdecide->add_option("--budget", decide.budget_text);
    cdecide->add_option("--out,-o", decide.out);

    ReproCmdOptions repro;
    auto* crepro = app.add_subcommand("reproduce", "replay the result table");
    crepro->add_option("--subset", repro.subset);
    crepro->add_flag("--all", repro.all);
    crepro->add_option("--budget", repro.budget_text);
    crepro->add_option("--jobs", repro.jobs);
    crepro->add_option("--json", repro.json_out);

    struct DotOptions {
        std::string graph_path;
        std::string out;
    } dot;
    auto* cdot = app.add_subcommand("export-dot", "write a Graphviz DOT file");
    cdot->add_option("--graph,-g", dot.graph_path)->required();
    cdot->add_option("--out,-o", dot.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cgen->parsed()) return cmd_gen(gen);
        if (csolve->parsed()) return cmd_solve(solve);
        if (cverify->parsed()) return cmd_verify(verify);
        if (cdecide->parsed()) return cmd_decide(decide);
        if (crepro->parsed()) return cmd_reproduce(repro);
        if (cdot->parsed()) {
            Graph g = graph_from_json(load_json_file(dot.graph_path));
            std::string text = graph_to_dot(g);
            if (dot.out.empty() || dot.out == "-") {
                std::cout << text;
            } else {
                std::ofstream out(dot.out);
                if (!out) throw parameter_error("cannot write " + dot.out);
                out << text;
            }
            return kExitOk;
        }
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitPrecondition;
}
