#pragma once

#include <string>
#include <vector>

#include "arboreq/coloring.hpp"
#include "arboreq/graph.hpp"

namespace arboreq {

struct SolveOutcome {
    PartialColoring coloring;
    std::string theorem_tag;
    std::vector<std::vector<Vertex>> recursion_trace;  // peel sets, outermost first
};

// Path power P_n^p, k >= p: peel the first k path vertices, recurse on the
// tail, extend greedily.  Base n <= 2k-1 by exact search.
SolveOutcome solve_path_power(int n, int p, int k, const ListAssignment& L);

// Path power P_n^p with (p-1)-lists, p >= 3: peel the first 2p-2 vertices,
// color them in two distinct-color batches (order depends on |D(v_p)|), and
// merge with two repetitions per color.
SolveOutcome solve_path_power_pminus1(int n, int p, const ListAssignment& L);

// Cycle power C_n^p, p >= 2, n >= 2p+2, k >= p+1: peel the first 2k cycle
// vertices, solve the remaining path power, extend with safe colors.
SolveOutcome solve_cycle_power(int n, int p, int k, const ListAssignment& L);

// 2-degenerate graphs with max degree >= 3, k >= ceil(maxdeg/2).
SolveOutcome solve_2degenerate(const Graph& g, int k, const ListAssignment& L);

// Graphs of maximum degree <= 2 (paths, cycles, isolated vertices), k >= 2:
// repeated consecutive peels with an endpoint-first start.
SolveOutcome solve_low_degree(const Graph& g, int k, const ListAssignment& L);

// K_n minus one edge (the builder's missing edge {0, n-1}),
// k >= ceil((n-1)/2): usage-capped greedy, last vertex from its D-list.
SolveOutcome solve_complete_minus_edge(int n, int k, const ListAssignment& L);

// 2l-regular graphs on 2l+2 vertices, l >= 2, k >= l: any arborable
// coloring found by exact search is automatically equitable.
SolveOutcome solve_regular_small(const Graph& g, int k, const ListAssignment& L);

}  // namespace arboreq
