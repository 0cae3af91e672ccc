#pragma once

#include <cstdint>
#include <optional>

#include "arboreq/coloring.hpp"
#include "arboreq/graph.hpp"

namespace arboreq {

struct SearchBudget {
    std::uint64_t node_limit = UINT64_MAX;
    double time_limit_secs = 0.0;  // 0 = no time limit

    static SearchBudget unlimited() { return {}; }
    static SearchBudget seconds(double s) { return {UINT64_MAX, s}; }
};

enum class Status { Feasible, Infeasible, Unknown };

struct Verdict {
    Status status = Status::Unknown;
    std::optional<PartialColoring> witness;           // Feasible only, verified
    std::optional<ListAssignment> refuted_assignment;  // forall-decisions only
    std::uint64_t nodes = 0;
};

// Complete backtracking search for an arborable L-coloring with every class
// of size at most cap.  Branches on vertices in descending-degree order;
// per-class acyclicity is maintained incrementally with a rollback
// union-find.  Unknown only on budget exhaustion.
Verdict exact_equitable_arborable(const Graph& g, const ListAssignment& L, int cap,
                                  SearchBudget budget = {});

// Decides whether some coloring into k classes has forest classes whose
// sizes realize the exact equitable multiset.  Color symmetry is broken by
// forcing class representatives in branching order.
Verdict decide_equitable_vertex_arborable(const Graph& g, int k, SearchBudget budget = {});

// Universally quantified decision over k-assignments drawn from a bounded
// color universe, modulo color permutation (canonical form: colors are
// numbered in first-use order).  Complete only when universe >= k * n.
// Infeasible carries a refuting assignment, re-checked before returning.
Verdict decide_equitably_k_list_arborable(const Graph& g, int k, int universe,
                                          SearchBudget budget = {});

}  // namespace arboreq
