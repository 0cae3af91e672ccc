#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arboreq/coloring.hpp"
#include "arboreq/graph.hpp"

namespace arboreq {

// Complete bipartite instance: X = vertices 0..a-1, Y = a..a+b-1.
struct BipartiteInstance {
    int a = 0;
    int b = 0;
    ListAssignment lists;

    int n() const { return a + b; }
    bool is_x(Vertex v) const { return v < a; }
    Graph graph() const { return Graph::complete_bipartite(a, b); }
};

// Side-count characterization of arborability on K_{a,b}: a total
// L-coloring is arborable iff every class has at most one vertex on some
// side.
bool bipartite_arborable_check(const BipartiteInstance& inst, const PartialColoring& f);

// Per-color (x-count, y-count) pairs, colors 0..k-1.
struct ClassProfile {
    std::vector<std::pair<int, int>> classes;
};

struct ProfileResult {
    bool feasible = false;
    ClassProfile witness;
};

// Exhaustive profile enumeration for a constant k-assignment: side counts
// per color summing to (a, b), each class with min side-count <= 1, class
// sizes bounded by cap or (exact_sizes) forced to the equitable multiset.
ProfileResult profile_oracle(int a, int b, int k, int cap, bool exact_sizes);

struct TwoHeavyResult {
    bool extended = false;
    PartialColoring coloring;          // total when extended
    std::vector<Vertex> obstruction;   // >= 3 Y-vertices listing a heavy color
};

// Extends an X-coloring with exactly two colors used twice-or-more to a
// full arborable L-coloring, or reports the Y-vertices whose lists meet
// the heavy pair when there are three or more of them.
TwoHeavyResult extend_two_heavy(const BipartiteInstance& inst, const PartialColoring& f_on_x,
                                std::pair<ColorId, ColorId> heavy);

// Derandomized coin-flip coloring: assigns each palette color to one side
// by the method of conditional expectations (minimizing the expected count
// of vertices with no own-side list color, ties to X), colors covered
// vertices, then gives the few leftover vertices pairwise distinct list
// colors.  Requires a k-assignment; the size precondition
// a+b <= (k+1)*2^k - 1 is enforced unless best_effort.
PartialColoring derandomized_split(const BipartiteInstance& inst, int k,
                                   bool best_effort = false);

struct SplitDetail {
    PartialColoring coloring;
    std::vector<ColorId> x_colors;   // palette colors assigned to side X
    std::vector<Vertex> uncovered;   // vertices handled by the leftover pass
};

SplitDetail derandomized_split_detail(const BipartiteInstance& inst, int k,
                                      bool best_effort = false);

struct BipartiteSearchResult {
    bool feasible = false;
    std::optional<PartialColoring> coloring;  // verified when feasible
};

// Complete search for an arborable L-coloring of K_{a,b} with class sizes
// at most cap.  Same-side vertices with identical lists are interchangeable,
// so the search branches on per-group color distributions; infeasible
// results are exhaustive refutations.
BipartiteSearchResult solve_bipartite_exact(const BipartiteInstance& inst, int k, int cap);

}  // namespace arboreq
