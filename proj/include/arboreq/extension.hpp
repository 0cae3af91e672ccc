#pragma once

#include <optional>
#include <vector>

#include "arboreq/coloring.hpp"
#include "arboreq/graph.hpp"

namespace arboreq {

// Extension state for a peel set S: the reduced lists of every peel vertex
// relative to an equitable, arborable coloring of the rest of the graph.
//
// For v in S with base coloring f:
//   d_list(v)   = L(v) minus colors with >= 2 f-colored neighbors of v
//   dangerous(v) = colors of d_list(v) with exactly 1 f-colored neighbor
//   safe(v)      = colors of d_list(v) with no f-colored neighbor
struct ExtensionContext {
    std::vector<Vertex> peel;  // ordered: peel[0] = x_1
    int m = 1;                 // allowed uses per color on the peel
    int k = 0;                 // list size
    bool relaxed = false;      // |peel| < m*k
    std::vector<std::vector<ColorId>> d_list;
    std::vector<std::vector<ColorId>> dangerous;
    std::vector<std::vector<ColorId>> safe;
    PartialColoring base;  // coloring of the full graph, domain = V - S

    int peel_index(Vertex v) const;  // -1 when v is not on the peel
};

// Builds the context from (G, S, L, f) where f is a total coloring of G-S
// (represented on full-graph vertices with exactly S uncolored).  The
// counting bounds |D(v)| >= k - floor(t/2) and |D_s(v)| >= k - t with
// t = |N_G(v) - S| are theorems for valid inputs; a violation raises
// internal_error.
ExtensionContext compute_d_lists(const Graph& g, const std::vector<Vertex>& peel,
                                 const ListAssignment& L, const PartialColoring& f, int m);

// Merges the base coloring with a peel coloring g after checking every
// hypothesis: g total on S, chosen from the D-lists, forest classes inside
// G[S], no color used more than m times, and at most one dangerous holder
// per used color.  The merged coloring is re-verified (arborable and
// equitable at cap ceil(n/k)) and internal_error is raised if that fails.
PartialColoring merge_colorings(const Graph& g, const ListAssignment& L,
                                const ExtensionContext& ctx, const PartialColoring& peel_coloring);

// Exhaustive backtracking for a peel coloring satisfying all merge
// hypotheses.  Deterministic: vertices in peel order, colors ascending.
// nullopt means no such coloring exists.
std::optional<PartialColoring> find_peel_coloring(const Graph& g, const ExtensionContext& ctx);

// Greedy single-repetition extension: requires |S| = k and
// |N_G(x_i) - S| <= 2i-1 for each i, colors x_k, ..., x_1 with pairwise
// distinct colors from their D-lists, and merges.  Never fails when the
// degree condition holds.
PartialColoring zhang_extend(const Graph& g, const std::vector<Vertex>& peel,
                             const ListAssignment& L, const PartialColoring& f);

}  // namespace arboreq
