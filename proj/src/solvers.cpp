#include "arboreq/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "arboreq/errors.hpp"
#include "arboreq/extension.hpp"
#include "arboreq/oracle.hpp"

namespace arboreq {

namespace {

// Lifts a coloring of an induced subgraph back to full-graph vertices,
// leaving everything else uncolored.
PartialColoring lift(const PartialColoring& sub, const std::vector<Vertex>& original, int n) {
    PartialColoring f(n);
    for (int i = 0; i < sub.size(); ++i)
        if (auto c = sub.color(i)) f.set(original[i], *c);
    return f;
}

void check_outcome(const Graph& g, const ListAssignment& L, int k, const SolveOutcome& out) {
    auto rep = verify_arborable_L_coloring(g, L, out.coloring, true);
    auto eq = verify_equitable(g, k, out.coloring);
    if (!rep.list_respected || !rep.arborable || !rep.total || !eq.equitable())
        throw internal_error("solver '" + out.theorem_tag + "' produced an invalid coloring");
}

PartialColoring exact_base(const Graph& g, const ListAssignment& L, int k,
                           const std::string& tag) {
    Verdict v = exact_equitable_arborable(g, L, equity_cap(g.vertex_count(), k));
    if (v.status != Status::Feasible)
        throw internal_error("solver '" + tag + "': base case unexpectedly infeasible");
    return *v.witness;
}

std::vector<Vertex> range_vertices(int from, int count) {
    std::vector<Vertex> out(count);
    for (int i = 0; i < count; ++i) out[i] = from + i;
    return out;
}

// Distinct-color greedy over an explicit vertex sequence, drawing from the
// given per-peel-vertex pools.  `taken` is shared across calls so that two
// batches stay internally distinct while allowed to overlap each other.
void color_batch(const ExtensionContext& ctx, const std::vector<int>& peel_indices,
                 const std::vector<std::vector<ColorId>>& pools, PartialColoring& pc,
                 const std::string& tag) {
    std::set<ColorId> taken;
    for (int idx : peel_indices) {
        bool placed = false;
        for (ColorId c : pools[idx]) {
            if (taken.count(c)) continue;
            pc.set(ctx.peel[idx], c);
            taken.insert(c);
            placed = true;
            break;
        }
        if (!placed)
            throw internal_error("solver '" + tag + "': batch greedy ran out of colors");
    }
}

}  // namespace

SolveOutcome solve_path_power(int n, int p, int k, const ListAssignment& L) {
    if (p < 1 || k < p) throw parameter_error("solve_path_power: need k >= p >= 1");
    if (n < 1) throw parameter_error("solve_path_power: n must be positive");
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_path_power: L is not a k-assignment");

    SolveOutcome out;
    out.theorem_tag = "path-power";
    Graph g = Graph::path_power(n, p);
    if (n <= 2 * k - 1) {
        out.coloring = exact_base(g, L, k, out.theorem_tag);
    } else {
        std::vector<Vertex> peel = range_vertices(0, k);
        std::vector<Vertex> tail = range_vertices(k, n - k);
        SolveOutcome sub = solve_path_power(n - k, p, k, L.restrict_to(tail));
        PartialColoring f = lift(sub.coloring, tail, n);
        out.coloring = zhang_extend(g, peel, L, f);
        out.recursion_trace.push_back(peel);
        for (auto& s : sub.recursion_trace) {
            for (auto& v : s) v += k;  // report peels in this call's numbering
            out.recursion_trace.push_back(std::move(s));
        }
    }
    check_outcome(g, L, k, out);
    return out;
}

SolveOutcome solve_path_power_pminus1(int n, int p, const ListAssignment& L) {
    if (p < 3) throw parameter_error("solve_path_power_pminus1: p must be at least 3");
    if (n < 1) throw parameter_error("solve_path_power_pminus1: n must be positive");
    int k = p - 1;
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_path_power_pminus1: L is not a (p-1)-assignment");

    SolveOutcome out;
    out.theorem_tag = "path-power-pminus1";
    Graph g = Graph::path_power(n, p);
    if (n <= 2 * p - 2) {
        out.coloring = exact_base(g, L, k, out.theorem_tag);
        check_outcome(g, L, k, out);
        return out;
    }

    int peel_size = 2 * p - 2;  // m = 2 repetitions of k = p-1
    std::vector<Vertex> peel = range_vertices(0, peel_size);
    std::vector<Vertex> tail = range_vertices(peel_size, n - peel_size);
    SolveOutcome sub = solve_path_power_pminus1(n - peel_size, p, L.restrict_to(tail));
    PartialColoring f = lift(sub.coloring, tail, n);
    ExtensionContext ctx = compute_d_lists(g, peel, L, f, /*m=*/2);

    // Peel vertex v_i lives at ctx index i-1.  The pivot is v_p.
    int pivot = p - 1;
    int pivot_d = static_cast<int>(ctx.d_list[pivot].size());
    PartialColoring pc(n);
    if (pivot_d == p - 1) {
        // batch 1: v_{2p-2}, ..., v_p from D; batch 2: v_{p-1}, ..., v_1 from D_s
        std::vector<int> first, second;
        for (int i = peel_size - 1; i >= pivot; --i) first.push_back(i);
        for (int i = pivot - 1; i >= 0; --i) second.push_back(i);
        color_batch(ctx, first, ctx.d_list, pc, out.theorem_tag);
        color_batch(ctx, second, ctx.safe, pc, out.theorem_tag);
    } else if (pivot_d == p - 2) {
        if (ctx.d_list[pivot] != ctx.safe[pivot])
            throw internal_error(
                "solve_path_power_pminus1: pivot D-list contains a dangerous color in the "
                "short-list case");
        // batch 1: v_{2p-2}, ..., v_{p+1}, v_{p-1} from D;
        // batch 2: v_p, v_{p-2}, ..., v_1 from D_s
        std::vector<int> first, second;
        for (int i = peel_size - 1; i >= pivot + 1; --i) first.push_back(i);
        first.push_back(pivot - 1);
        second.push_back(pivot);
        for (int i = pivot - 2; i >= 0; --i) second.push_back(i);
        color_batch(ctx, first, ctx.d_list, pc, out.theorem_tag);
        color_batch(ctx, second, ctx.safe, pc, out.theorem_tag);
    } else {
        throw internal_error("solve_path_power_pminus1: pivot D-list has unexpected size " +
                             std::to_string(pivot_d));
    }
    out.coloring = merge_colorings(g, L, ctx, pc);
    out.recursion_trace.push_back(peel);
    for (auto& s : sub.recursion_trace) {
        for (auto& v : s) v += peel_size;
        out.recursion_trace.push_back(std::move(s));
    }
    check_outcome(g, L, k, out);
    return out;
}

SolveOutcome solve_cycle_power(int n, int p, int k, const ListAssignment& L) {
    if (p < 2 || k < p + 1) throw parameter_error("solve_cycle_power: need p >= 2, k >= p+1");
    if (n < 2 * p + 2) throw parameter_error("solve_cycle_power: need n >= 2p+2");
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_cycle_power: L is not a k-assignment");

    SolveOutcome out;
    out.theorem_tag = "cycle-power";
    Graph g = Graph::cycle_power(n, p);
    if (n <= 2 * k) {
        out.coloring = exact_base(g, L, k, out.theorem_tag);
        check_outcome(g, L, k, out);
        return out;
    }

    // Removing 2k consecutive cycle vertices leaves P_{n-2k}^p: the arc
    // around the removed block has length 2k+1 > p.
    std::vector<Vertex> peel = range_vertices(0, 2 * k);
    std::vector<Vertex> tail = range_vertices(2 * k, n - 2 * k);
    SolveOutcome sub = solve_path_power(n - 2 * k, p, k, L.restrict_to(tail));
    PartialColoring f = lift(sub.coloring, tail, n);
    ExtensionContext ctx = compute_d_lists(g, peel, L, f, /*m=*/2);

    // v_1, ..., v_k ascending then v_2k, ..., v_{k+1} descending, each batch
    // with pairwise distinct safe colors.
    std::vector<int> first, second;
    for (int i = 0; i < k; ++i) first.push_back(i);
    for (int i = 2 * k - 1; i >= k; --i) second.push_back(i);
    PartialColoring pc(n);
    color_batch(ctx, first, ctx.safe, pc, out.theorem_tag);
    color_batch(ctx, second, ctx.safe, pc, out.theorem_tag);
    out.coloring = merge_colorings(g, L, ctx, pc);
    out.recursion_trace.push_back(peel);
    check_outcome(g, L, k, out);
    return out;
}

SolveOutcome solve_low_degree(const Graph& g, int k, const ListAssignment& L) {
    if (g.max_degree() > 2) throw structural_error("solve_low_degree: max degree exceeds 2");
    if (k < 2) throw parameter_error("solve_low_degree: k must be at least 2");
    int n = g.vertex_count();
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_low_degree: L is not a k-assignment");

    SolveOutcome out;
    out.theorem_tag = "low-degree";
    if (n <= 2 * k - 1) {
        out.coloring = exact_base(g, L, k, out.theorem_tag);
        check_outcome(g, L, k, out);
        return out;
    }

    // Build a peel of k vertices walked consecutively inside components.
    // The walk only needs to constrain the first vertex: start at a vertex
    // of degree <= 1 when one exists, otherwise on a cycle whose next
    // vertex joins the peel immediately.
    std::vector<bool> in_peel(n, false);
    std::vector<Vertex> peel;
    auto pick_start = [&]() -> Vertex {
        for (Vertex v = 0; v < n; ++v) {
            if (in_peel[v]) continue;
            if (g.degree(v) <= 1) return v;
        }
        for (Vertex v = 0; v < n; ++v)
            if (!in_peel[v]) return v;
        throw internal_error("solve_low_degree: peel start exhausted");
    };
    Vertex cur = pick_start();
    in_peel[cur] = true;
    peel.push_back(cur);
    while (static_cast<int>(peel.size()) < k) {
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur))
            if (!in_peel[u]) {
                next = u;
                break;
            }
        if (next == -1) next = pick_start();
        in_peel[next] = true;
        peel.push_back(next);
        cur = next;
    }

    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!in_peel[v]) rest.push_back(v);
    auto induced = g.induced_subgraph(rest);
    SolveOutcome sub = solve_low_degree(induced.graph, k, L.restrict_to(rest));
    PartialColoring f = lift(sub.coloring, rest, n);
    out.coloring = zhang_extend(g, peel, L, f);
    out.recursion_trace.push_back(peel);
    for (auto& s : sub.recursion_trace) {
        for (auto& v : s) v = rest[v];
        out.recursion_trace.push_back(std::move(s));
    }
    check_outcome(g, L, k, out);
    return out;
}

SolveOutcome solve_2degenerate(const Graph& g, int k, const ListAssignment& L) {
    int n = g.vertex_count();
    if (!is_degenerate(g, 2)) throw structural_error("solve_2degenerate: graph is not 2-degenerate");
    int delta = g.max_degree();
    if (delta < 3) return solve_low_degree(g, k, L);
    if (k < equity_cap(delta, 2))
        throw parameter_error("solve_2degenerate: need k >= ceil(maxdeg/2)");
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_2degenerate: L is not a k-assignment");

    SolveOutcome out;
    out.theorem_tag = "two-degenerate";
    Graph graph = g;
    if (n <= 2 * k - 1) {
        out.coloring = exact_base(graph, L, k, out.theorem_tag);
        check_outcome(graph, L, k, out);
        return out;
    }

    // Peel construction: x_1 = a low-degree endpoint of an edge, x_k = its
    // neighbor, the middle filled by repeated low-degree removal with x_k
    // held out.
    Vertex x1 = -1, xk = -1;
    for (Vertex v = 0; v < n && x1 == -1; ++v)
        if (g.degree(v) >= 1 && g.degree(v) <= 2) {
            x1 = v;
            xk = g.neighbors(v).front();
        }
    if (x1 == -1)
        throw internal_error("solve_2degenerate: no low-degree vertex with a neighbor");

    std::vector<bool> removed(n, false);
    removed[x1] = removed[xk] = true;
    std::vector<Vertex> middle;
    for (int i = 2; i <= k - 1; ++i) {
        // smallest-index vertex of degree <= 2 in G minus picked vertices
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick == -1; ++v) {
            if (removed[v]) continue;
            int deg = 0;
            for (Vertex u : g.neighbors(v))
                if (!removed[u]) ++deg;
            if (deg <= 2) pick = v;
        }
        if (pick == -1)
            throw internal_error("solve_2degenerate: degeneracy peel stalled");
        removed[pick] = true;
        middle.push_back(pick);
    }
    std::vector<Vertex> peel{x1};
    peel.insert(peel.end(), middle.begin(), middle.end());
    peel.push_back(xk);

    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) rest.push_back(v);
    auto induced = g.induced_subgraph(rest);
    SolveOutcome sub = induced.graph.max_degree() <= 2
                           ? solve_low_degree(induced.graph, k, L.restrict_to(rest))
                           : solve_2degenerate(induced.graph, k, L.restrict_to(rest));
    PartialColoring f = lift(sub.coloring, rest, n);
    out.coloring = zhang_extend(g, peel, L, f);
    out.recursion_trace.push_back(peel);
    for (auto& s : sub.recursion_trace) {
        for (auto& v : s) v = rest[v];
        out.recursion_trace.push_back(std::move(s));
    }
    check_outcome(g, L, k, out);
    return out;
}

SolveOutcome solve_complete_minus_edge(int n, int k, const ListAssignment& L) {
    if (n < 3) throw parameter_error("solve_complete_minus_edge: n must be at least 3");
    if (k < equity_cap(n - 1, 2))
        throw parameter_error("solve_complete_minus_edge: need k >= ceil((n-1)/2)");
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_complete_minus_edge: L is not a k-assignment");

    SolveOutcome out;
    out.theorem_tag = "complete-minus-edge";
    Graph g = Graph::complete_minus_edge(n);
    PartialColoring f(n);
    std::map<ColorId, int> usage;

    // Vertices 0..n-2 greedily, each color used at most twice: the least
    // used list color, smallest id on ties.
    for (Vertex v = 0; v + 1 < n; ++v) {
        ColorId best = -1;
        int best_usage = 2;
        for (ColorId c : L.list(v)) {
            int u = usage.count(c) ? usage.at(c) : 0;
            if (u < best_usage) {
                best = c;
                best_usage = u;
            }
        }
        if (best == -1)
            throw internal_error("solve_complete_minus_edge: greedy ran out of colors");
        f.set(v, best);
        ++usage[best];
    }

    // Last vertex: only neighbor occurrences matter for acyclicity, and the
    // non-neighbor is vertex 0, so discount its color.  A class of three
    // then touches the last vertex through at most one edge.
    Vertex last = n - 1;
    ColorId pick = -1;
    for (ColorId c : L.list(last)) {
        int among_neighbors = 0;
        for (Vertex u = 1; u < last; ++u)
            if (*f.color(u) == c) ++among_neighbors;
        if (among_neighbors <= 1) {
            int total = usage.count(c) ? usage.at(c) : 0;
            if (total + 1 <= equity_cap(n, k)) {
                pick = c;
                break;
            }
        }
    }
    if (pick == -1)
        throw internal_error("solve_complete_minus_edge: no admissible color for the last vertex");
    f.set(last, pick);

    out.coloring = std::move(f);
    check_outcome(g, L, k, out);
    return out;
}

SolveOutcome solve_regular_small(const Graph& g, int k, const ListAssignment& L) {
    int n = g.vertex_count();
    int delta = g.max_degree();
    if (delta % 2 != 0 || delta < 4)
        throw parameter_error("solve_regular_small: degree must be even and at least 4");
    int ell = delta / 2;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != delta)
            throw parameter_error("solve_regular_small: graph is not regular");
    if (n != 2 * ell + 2)
        throw parameter_error("solve_regular_small: order must be 2l+2");
    if (k < ell) throw parameter_error("solve_regular_small: need k >= l");
    if (L.size() != n || !L.is_k_assignment(k))
        throw parameter_error("solve_regular_small: L is not a k-assignment");

    SolveOutcome out;
    out.theorem_tag = "regular-small";
    if (k == ell) {
        // Any arborable coloring works: a class of four or more would have
        // minimum degree two inside itself and close a cycle.  Search with
        // no equity pruning, then assert the cap.
        Verdict v = exact_equitable_arborable(g, L, n);
        if (v.status != Status::Feasible)
            throw internal_error("solve_regular_small: no arborable coloring found");
        out.coloring = *v.witness;
    } else {
        out.coloring = exact_base(g, L, k, out.theorem_tag);
    }
    check_outcome(g, L, k, out);
    return out;
}

}  // namespace arboreq
